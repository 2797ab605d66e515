#include "selfsim/lazy_pattern.hpp"

#include <algorithm>

namespace selfsim {

std::string to_decimal(Length v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s += static_cast<char>('0' + static_cast<int>(v % 10));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

Length checked_mul(Length a, Length b) {
  Length out;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("pattern length exceeds 128 bits");
  return out;
}

Length checked_add(Length a, Length b) {
  Length out;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError("pattern length exceeds 128 bits");
  return out;
}

namespace {

class LeafExpr final : public PatternExpr {
 public:
  explicit LeafExpr(Pattern p) : p_(std::move(p)), rank_(p_.size(), 0) {
    const auto& gaps = p_.gap_positions();
    for (std::size_t r = 0; r < gaps.size(); ++r) rank_[gaps[r] - 1] = r + 1;
  }

  const CyclicGroup& group() const override { return p_.group(); }
  Length length() const override { return p_.size(); }
  Length gap_count() const override { return p_.gap_count(); }
  Symbol symbol(Length i) const override { return p_[static_cast<std::size_t>(i - 1)]; }
  Length gap_rank(Length i) const override { return rank_[static_cast<std::size_t>(i - 1)]; }
  Length gap_position(Length rank) const override {
    return p_.gap_positions()[static_cast<std::size_t>(rank - 1)];
  }
  std::string describe() const override { return p_.to_string(); }

 private:
  Pattern p_;
  std::vector<std::size_t> rank_;
};

class OneGapPowerExpr final : public PatternExpr {
 public:
  OneGapPowerExpr(LazyPattern base, std::uint64_t k)
      : base_(std::move(base)),
        k_(k),
        width_(base_.length()),
        hole_(base_.gap_position(1)),
        gap_(std::get<Perm>(base_.symbol(hole_))) {
    length_ = 1;
    gap_index_ = 1;
    for (std::uint64_t i = 0; i < k_; ++i) {
      length_ = checked_mul(length_, width_);
      gap_index_ = checked_add(checked_mul(width_, gap_index_ - 1), hole_);
    }
  }

  const CyclicGroup& group() const override { return base_.group(); }
  Length length() const override { return length_; }
  Length gap_count() const override { return 1; }

  Symbol symbol(Length x) const override {
    std::uint64_t hits = 0;
    for (std::uint64_t level = k_; level > 0; --level) {
      Length t = (x - 1) / width_;
      Length s = (x - 1) % width_ + 1;
      if (s != hole_) {
        Letter b = std::get<Letter>(base_.symbol(s));
        return hits == 0 ? b : gap_.pow(hits)(b);
      }
      ++hits;
      x = t + 1;
    }
    return gap_.pow(hits);
  }

  Length gap_rank(Length) const override { return 1; }
  Length gap_position(Length) const override { return gap_index_; }
  std::string describe() const override {
    return "power(" + base_.describe() + "," + std::to_string(k_) + ")";
  }

 private:
  LazyPattern base_;
  std::uint64_t k_;
  Length width_;
  Length hole_;
  Perm gap_;
  Length length_;
  Length gap_index_;
};

}  // namespace

LazyPattern::LazyPattern(const Pattern& p) : expr_(std::make_shared<LeafExpr>(p)) {}

LazyPattern::LazyPattern(std::shared_ptr<const PatternExpr> expr) : expr_(std::move(expr)) {
  if (!expr_) throw DomainError("null pattern expression");
}

Symbol LazyPattern::symbol(Length i) const {
  if (i == 0 || i > length()) {
    throw DomainError("pattern position " + to_decimal(i) + " outside 1.." + to_decimal(length()));
  }
  return expr_->symbol(i);
}

Length LazyPattern::gap_position(Length rank) const {
  if (rank == 0 || rank > gap_count()) {
    throw DomainError("gap rank " + to_decimal(rank) + " outside 1.." + to_decimal(gap_count()));
  }
  return expr_->gap_position(rank);
}

std::optional<Pattern> LazyPattern::materialize(std::size_t limit) const {
  if (const auto* leaf = dynamic_cast<const LeafExpr*>(expr_.get())) {
    if (leaf->length() <= limit) {
      std::vector<Symbol> out;
      for (Length i = 1; i <= leaf->length(); ++i) out.push_back(leaf->symbol(i));
      return Pattern(group(), std::move(out));
    }
  }
  if (length() > limit) return std::nullopt;
  std::vector<Symbol> out;
  out.reserve(static_cast<std::size_t>(length()));
  for (Length i = 1; i <= length(); ++i) out.push_back(expr_->symbol(i));
  return Pattern(group(), std::move(out));
}

Pattern LazyPattern::to_pattern(std::size_t limit) const {
  auto p = materialize(limit);
  if (!p) {
    throw DomainError("pattern of length " + to_decimal(length()) + " is too long to materialize");
  }
  return *std::move(p);
}

std::string LazyPattern::to_string(std::size_t limit) const {
  if (length() <= limit) return to_pattern(limit).to_string();
  return describe();
}

LazyPattern lazy_power(const LazyPattern& q, std::uint64_t k) {
  if (q.gap_count() != 1) throw DomainError("lazy power needs a one-gap pattern");
  if (k == 0) return LazyPattern(Pattern::identity(q.group()));
  if (k == 1) return q;
  return LazyPattern(std::make_shared<OneGapPowerExpr>(q, k));
}

bool same_symbols(const LazyPattern& x, const LazyPattern& y, std::size_t limit) {
  if (x.group() != y.group() || x.length() != y.length() || x.gap_count() != y.gap_count()) {
    return false;
  }
  Length n = std::min<Length>(x.length(), limit);
  for (Length i = 1; i <= n; ++i) {
    if (x.symbol(i) != y.symbol(i)) return false;
  }
  return true;
}

}  // namespace selfsim
