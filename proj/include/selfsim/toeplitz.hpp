#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "selfsim/lazy_pattern.hpp"
#include "selfsim/pattern.hpp"
#include "selfsim/seq.hpp"

namespace selfsim {

/// The Toeplitz word T(P), indexed from 1. Throws DomainError for
/// non-productive patterns.
Seq toeplitz_word(const LazyPattern& p);

/// T(P)(n) by the top-down recurrence, without memoization.
Letter toeplitz_at(const LazyPattern& p, Length n);

/// T(P)(1..count), bottom-up.
std::vector<Letter> toeplitz_prefix(const LazyPattern& p, std::size_t count);

struct EquivalenceVerdict {
  /// First index where the words differ.
  std::optional<std::uint64_t> mismatch;
  std::uint64_t depth;

  bool equivalent() const noexcept { return !mismatch; }
};

/// Compares T(P) and T(Q) on their first `depth` terms.
EquivalenceVerdict pattern_equiv(const LazyPattern& p, const LazyPattern& q, std::uint64_t depth);

/// A uniform morphism on Z_k given by its images h(0), ..., h(k-1).
class UniformMorphism {
 public:
  explicit UniformMorphism(std::vector<Word> images);

  const CyclicGroup& group() const noexcept { return images_.front().group(); }
  std::size_t width() const noexcept { return images_.front().size(); }
  const Word& image(Letter a) const { return images_.at(a); }

  Word apply(const Word& w) const;
  /// h^ω(start), indexed from 1. Requires h(start) to begin with start.
  Seq fixed_point(Letter start) const;
  std::string to_string() const;

  friend bool operator==(const UniformMorphism&, const UniformMorphism&) = default;

 private:
  std::vector<Word> images_;
};

/// h(a) = P with every gap filled by a. Requires a productive one-gap pattern.
UniformMorphism pattern_to_morphism(const Pattern& p);

/// Inverse direction for morphisms of shape h(a) = b·u·f(a)·v.
Pattern morphism_to_pattern(const UniformMorphism& h);

}  // namespace selfsim
