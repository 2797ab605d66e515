#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "selfsim/group.hpp"

namespace selfsim {

/// Index of the first term. Additive sequences and Toeplitz words start at
/// 1, Keane words at 0.
enum class IndexBase : std::uint8_t { Zero = 0, One = 1 };

/// An evaluable one-sided infinite sequence over Z_k.
///
/// The evaluator must be pure; it may memoize internally. An optional range
/// evaluator provides a faster bulk path for consecutive terms and must agree
/// with the pointwise evaluator.
class Seq {
 public:
  using Evaluator = std::function<Letter(std::uint64_t)>;
  using RangeEvaluator = std::function<std::vector<Letter>(std::uint64_t first, std::uint64_t count)>;

  Seq(CyclicGroup group, IndexBase base, std::string description, Evaluator eval,
      RangeEvaluator range = {});

  const CyclicGroup& group() const noexcept { return group_; }
  IndexBase base() const noexcept { return base_; }
  std::uint64_t first_index() const noexcept { return static_cast<std::uint64_t>(base_); }
  const std::string& description() const noexcept { return description_; }

  /// Raw value at index n; throws DomainError below the first index.
  Letter operator()(std::uint64_t n) const;
  GroupElem at(std::uint64_t n) const { return GroupElem(group_, (*this)(n)); }

  /// Terms first, first+1, ..., first+count-1.
  std::vector<Letter> range(std::uint64_t first, std::uint64_t count) const;
  /// The first `count` terms.
  std::vector<Letter> prefix(std::uint64_t count) const { return range(first_index(), count); }

 private:
  CyclicGroup group_;
  IndexBase base_;
  std::string description_;
  Evaluator eval_;
  RangeEvaluator range_;
};

Seq constant_seq(const CyclicGroup& group, IndexBase base, Letter value);

/// preperiod · period^ω.
Seq ultimately_periodic(const Word& preperiod, const Word& period, IndexBase base);

/// The same terms re-indexed to start at another base.
Seq rebase(const Seq& s, IndexBase base);

/// Arithmetic subsequence: s(a + b·n) for base 0, s(a + b·(n-1)) for base 1.
Seq subseq(const Seq& s, std::uint64_t a, std::uint64_t b);

Seq add(const Seq& s, const Seq& t);
Seq shift_const(const Seq& s, const GroupElem& c);
/// Pointwise s(n) ⊙ c, landing in the group of c.
Seq scale(const Seq& s, const GroupElem& c);
/// Quotient map Z_n → Z_k, v ↦ v mod k; requires k | n.
Seq reduce_mod(const Seq& s, std::uint32_t k);

struct Similar {
  GroupElem shift;
};

struct Mismatch {
  std::uint64_t index;
  GroupElem expected;
  GroupElem found;
};

/// Outcome of checking s = t + c on a prefix. `Similar` certifies the relation
/// only up to `depth` terms.
struct SimilarityVerdict {
  std::variant<Similar, Mismatch> outcome;
  std::uint64_t depth;

  bool similar() const noexcept { return std::holds_alternative<Similar>(outcome); }
  std::string to_string() const;
};

/// Checks s(n) = t(n) + c for the first `depth` indices, with c fixed by the
/// first term.
SimilarityVerdict similar_up_to(const Seq& s, const Seq& t, std::uint64_t depth);

struct ScanCell {
  std::uint64_t a;
  std::uint64_t b;
  SimilarityVerdict verdict;
};

/// similar_up_to(subseq(s, a, b), s, depth) for every a in
/// [first_index, a_max] and b in [1, b_max], ordered by a then b.
std::vector<ScanCell> as_scan(const Seq& s, std::uint64_t a_max, std::uint64_t b_max,
                              std::uint64_t depth);

/// Preperiod is a count of leading terms: s(first + n0 + i + t) = s(first + n0 + i).
struct Period {
  std::uint64_t preperiod;
  std::uint64_t period;
  friend bool operator==(const Period&, const Period&) = default;
};

/// Smallest period t (then smallest preperiod) consistent with the length-N
/// prefix, subject to t <= N/2, n0 + 2t <= N and n0 <= N/4. Without the last
/// bound any prefix whose final two terms agree would count as periodic.
std::optional<Period> detect_period(const Seq& s, std::uint64_t length);
std::optional<Period> detect_period(const std::vector<Letter>& terms);

enum class DumpFormat { Text, Csv, JsonLines };

void write_prefix(std::ostream& out, const Seq& s, std::uint64_t count, DumpFormat format);

}  // namespace selfsim
