#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "selfsim/group.hpp"

namespace selfsim {

/// A pattern position: a letter or a gap carrying a permutation.
using Symbol = std::variant<Letter, Perm>;

inline bool is_gap(const Symbol& s) noexcept { return std::holds_alternative<Perm>(s); }

std::string symbol_to_string(const Symbol& s);

/// A nonempty finite word over letters and gaps of one cyclic group.
class Pattern {
 public:
  Pattern(CyclicGroup group, std::vector<Symbol> symbols);

  /// The one-symbol pattern `?`.
  static Pattern identity(const CyclicGroup& group);
  static Pattern from_word(const Word& w);

  const CyclicGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  std::size_t gap_count() const noexcept { return gap_positions_.size(); }
  /// 1-based positions of the gaps, increasing.
  const std::vector<std::size_t>& gap_positions() const noexcept { return gap_positions_; }
  /// The letters in order, skipping gaps.
  std::vector<Letter> letters() const;

  /// First symbol is a letter.
  bool is_productive() const noexcept { return !is_gap(symbols_.front()); }
  bool is_one_gap() const noexcept { return gap_count() == 1; }

  std::string to_string() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  CyclicGroup group_;
  std::vector<Symbol> symbols_;
  std::vector<std::size_t> gap_positions_;
};

/// Letters: digits or `{v}`; gaps: `?`, `r<d>`, `r{d}`, `[p:v0,...]`.
/// Whitespace is ignored. Digits after `r` are consumed while the value
/// stays below the group order.
Pattern parse_pattern(std::string_view text, const CyclicGroup& group);

/// Letters of u pass through; the j-th gap f of u takes the j-th symbol of v,
/// a letter b becoming f(b) and a gap g becoming f∘g.
Pattern fill(const Pattern& u, std::span<const Symbol> v);

/// u^n as a literal concatenation.
Pattern repeat(const Pattern& p, std::size_t times);

/// Toeplitz composition P∘Q.
Pattern compose(const Pattern& p, const Pattern& q);

/// P^(0) = ?, P^(n+1) = P∘P^(n).
Pattern power(const Pattern& p, std::uint64_t k);

/// Guard for materialized patterns; larger results throw DomainError.
inline constexpr std::size_t kMaxPatternLength = std::size_t{1} << 24;

}  // namespace selfsim
