#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "selfsim/pattern.hpp"

namespace selfsim {

/// Position and length arithmetic for patterns too long to materialize.
__extension__ typedef unsigned __int128 Length;

std::string to_decimal(Length v);
/// Throws DomainError on overflow.
Length checked_mul(Length a, Length b);
Length checked_add(Length a, Length b);

/// A pattern evaluated symbol by symbol. Positions and gap ranks are 1-based.
class PatternExpr {
 public:
  virtual ~PatternExpr() = default;

  virtual const CyclicGroup& group() const = 0;
  virtual Length length() const = 0;
  virtual Length gap_count() const = 0;
  virtual Symbol symbol(Length i) const = 0;
  /// Rank among the gaps of the gap at position i.
  virtual Length gap_rank(Length i) const = 0;
  /// Position of the gap with the given rank.
  virtual Length gap_position(Length rank) const = 0;
  virtual std::string describe() const = 0;
};

/// Shared handle to an immutable PatternExpr. Implicitly wraps a Pattern.
class LazyPattern {
 public:
  LazyPattern(const Pattern& p);  // NOLINT(google-explicit-constructor)
  explicit LazyPattern(std::shared_ptr<const PatternExpr> expr);

  const CyclicGroup& group() const { return expr_->group(); }
  Length length() const { return expr_->length(); }
  Length gap_count() const { return expr_->gap_count(); }
  Symbol symbol(Length i) const;
  Length gap_rank(Length i) const { return expr_->gap_rank(i); }
  Length gap_position(Length rank) const;
  std::string describe() const { return expr_->describe(); }

  bool is_productive() const { return !is_gap(symbol(1)); }

  /// The literal pattern, or nothing when longer than `limit`.
  std::optional<Pattern> materialize(std::size_t limit = kMaxPatternLength) const;
  /// Like materialize, but throws DomainError when too long.
  Pattern to_pattern(std::size_t limit = kMaxPatternLength) const;
  /// Literal text up to `limit` symbols, otherwise the expression.
  std::string to_string(std::size_t limit = 4096) const;

  const PatternExpr& expr() const noexcept { return *expr_; }

 private:
  std::shared_ptr<const PatternExpr> expr_;
};

/// Q^(k) for a one-gap pattern Q without building it.
LazyPattern lazy_power(const LazyPattern& q, std::uint64_t k);

/// Literal symbol equality on every position (lengths up to `limit`), or on
/// a prefix of `limit` symbols plus matching length and gap count.
bool same_symbols(const LazyPattern& x, const LazyPattern& y, std::size_t limit = 1 << 16);

}  // namespace selfsim
