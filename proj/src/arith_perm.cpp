#include "selfsim/arith_perm.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

#include "selfsim/numtheory.hpp"
#include "selfsim/seq.hpp"
#include "selfsim/toeplitz.hpp"

namespace selfsim {

namespace {

void require_one_gap(const LazyPattern& p, const char* what) {
  if (p.gap_count() != 1) {
    throw DomainError(std::string(what) + " needs a one-gap pattern, got " +
                      to_decimal(p.gap_count()) + " gaps");
  }
}

/// Representative in 1..r of x modulo r.
Length wrap(Length x, Length r) {
  Length m = x % r;
  return m == 0 ? r : m;
}

class CoprimeExpr final : public PatternExpr {
 public:
  CoprimeExpr(const LazyPattern& p, std::uint64_t a, std::uint64_t b)
      : a_(a), b_(b), describe_base_(p.describe()) {
    Length r = p.length();
    order_ = multiplicative_order(static_cast<std::uint64_t>(r % b), b);
    power_ = std::make_unique<LazyPattern>(lazy_power(p, order_));
    length_ = power_->length();
    c_ = (length_ - 1) / b;
    gap_ = checked_add(checked_mul(a, c_), 1);
  }

  const CyclicGroup& group() const override { return power_->group(); }
  Length length() const override { return length_; }
  Length gap_count() const override { return 1; }
  Symbol symbol(Length i) const override {
    Length x = checked_add(a_, checked_mul(b_, i - 1));
    return power_->symbol(wrap(x, length_));
  }
  Length gap_rank(Length) const override { return 1; }
  Length gap_position(Length) const override { return gap_; }
  std::string describe() const override {
    return "coprime(" + describe_base_ + "," + std::to_string(a_) + "," + std::to_string(b_) + ")";
  }

  std::uint64_t order() const noexcept { return order_; }
  Length c() const noexcept { return c_; }

 private:
  std::uint64_t a_, b_;
  std::string describe_base_;
  std::uint64_t order_ = 1;
  std::unique_ptr<LazyPattern> power_;
  Length length_ = 0, c_ = 0, gap_ = 0;
};

class BlockExpr final : public PatternExpr {
 public:
  BlockExpr(LazyPattern p, std::uint64_t a, std::uint64_t b)
      : p_(std::move(p)), a_(a), b_(b), r_(p_.length()), c_(r_ / b) {
    if (p_.gap_count() == 1) {
      Length j = p_.gap_position(1);
      Length off = (j % r_ + r_ - a_ % r_) % r_;
      if (off % b_ == 0) slot_ = off / b_ + 1;
    }
  }

  const CyclicGroup& group() const override { return p_.group(); }
  Length length() const override { return c_; }
  Length gap_count() const override { return slot_ ? 1 : 0; }
  Symbol symbol(Length i) const override {
    return p_.symbol(wrap(checked_add(a_, checked_mul(b_, i - 1)), r_));
  }
  Length gap_rank(Length) const override { return 1; }
  Length gap_position(Length) const override { return *slot_; }
  std::string describe() const override {
    return "block(" + p_.describe() + "," + std::to_string(a_) + "," + std::to_string(b_) + ")";
  }

  std::optional<Length> slot() const noexcept { return slot_; }

 private:
  LazyPattern p_;
  std::uint64_t a_, b_;
  Length r_, c_;
  std::optional<Length> slot_;
};

class DividingExpr final : public PatternExpr {
 public:
  DividingExpr(LazyPattern p, LazyPattern block, std::uint64_t a, std::uint64_t b)
      : p_(std::move(p)),
        block_(std::move(block)),
        a_(a),
        b_(b),
        r_(p_.length()),
        c_(block_.length()),
        j_(p_.gap_position(1)),
        slot_(block_.gap_position(1)),
        f_(std::get<Perm>(p_.symbol(j_))) {
    head_ = checked_mul(c_, j_ - 1);
    length_ = checked_mul(c_, r_);
  }

  const CyclicGroup& group() const override { return p_.group(); }
  Length length() const override { return length_; }
  Length gap_count() const override { return c_; }

  Symbol symbol(Length x) const override {
    if (x > head_ && x <= head_ + c_) {
      return x - head_ == slot_ ? f_ : Perm::identity(group());
    }
    // B∘u on the left, B∘v on the right: copies of B whose gap takes the
    // next letter of u (resp. v).
    Length offset = x <= head_ ? 0 : j_;
    Length y = x <= head_ ? x : x - head_ - c_;
    Length t = (y - 1) / c_;
    Length s = (y - 1) % c_ + 1;
    if (s != slot_) return block_.symbol(s);
    return f_(std::get<Letter>(p_.symbol(offset + t + 1)));
  }

  Length gap_rank(Length x) const override { return x - head_; }
  Length gap_position(Length rank) const override { return head_ + rank; }
  std::string describe() const override {
    return "divide(" + p_.describe() + "," + std::to_string(a_) + "," + std::to_string(b_) + ")";
  }

 private:
  LazyPattern p_;
  LazyPattern block_;
  std::uint64_t a_, b_;
  Length r_, c_, j_, slot_;
  Perm f_;
  Length head_ = 0, length_ = 0;
};

std::uint64_t checked_mul64(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out;
  if (__builtin_mul_overflow(x, y, &out)) throw DomainError("progression parameters overflow");
  return out;
}

}  // namespace

LazyPattern arith_perm_coprime(const LazyPattern& p, std::uint64_t a, std::uint64_t b) {
  require_one_gap(p, "arith_perm_coprime");
  const Length r = p.length();
  if (r < 2) throw DomainError("arith_perm_coprime needs a pattern of length at least 2");
  if (p.gap_position(1) != r) throw DomainError("arith_perm_coprime needs the gap at the end");
  if (a == 0 || b == 0 || a > b) throw DomainError("arith_perm_coprime needs 1 <= a <= b");
  if (std::gcd(static_cast<std::uint64_t>(r % b), b) != 1) {
    throw DomainError("arith_perm_coprime needs b coprime to the pattern length");
  }
  return LazyPattern(std::make_shared<CoprimeExpr>(p, a, b));
}

GapToEnd gap_to_end(const Pattern& q) {
  if (!q.is_one_gap()) throw DomainError("gap_to_end needs a one-gap pattern");
  const std::size_t h = q.gap_positions().front();
  if (h == 1) throw DomainError("gap_to_end needs at least one letter before the gap");
  std::vector<Symbol> out(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(h - 1));
  std::reverse(out.begin(), out.end());
  out.insert(out.end(), q.symbols().rbegin(),
             q.symbols().rbegin() + static_cast<std::ptrdiff_t>(q.size() - h));
  out.push_back(q[h - 1]);
  return {Pattern(q.group(), std::move(out)), h - 1, q.size() - 1};
}

LazyPattern dividing_block(const LazyPattern& p, std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw DomainError("dividing_block needs positive a and b");
  if (p.length() % b != 0) throw DomainError("dividing_block needs b to divide the pattern length");
  return LazyPattern(std::make_shared<BlockExpr>(p, a, b));
}

LazyPattern arith_perm_dividing(const LazyPattern& p, std::uint64_t a, std::uint64_t b) {
  require_one_gap(p, "arith_perm_dividing");
  if (a >= p.gap_position(1)) {
    throw DomainError("arith_perm_dividing needs a below the gap index; raise the power first");
  }
  LazyPattern block = dividing_block(p, a, b);
  if (block.gap_count() == 0) return block;
  return LazyPattern(std::make_shared<DividingExpr>(p, block, a, b));
}

std::pair<LazyPattern, std::uint64_t> raise_until_gap_past(const LazyPattern& q, std::uint64_t a) {
  require_one_gap(q, "raise_until_gap_past");
  const Length r = q.length();
  const Length h = q.gap_position(1);
  if (h == 1) throw DomainError("raise_until_gap_past needs a productive pattern");
  std::uint64_t m = 1;
  for (Length g = h; g <= a; ++m) g = checked_add(checked_mul(r, g - 1), h);
  return {lazy_power(q, m), m};
}

std::string describe(const TraceStep& step) {
  struct {
    std::string operator()(const GapToEndStep& s) const {
      return "gap-to-end " + s.before.to_string() + " -> " + s.after.to_string() + ", (a,b) " +
             std::to_string(s.a_in) + "," + std::to_string(s.b_in) + " -> " +
             std::to_string(s.a_out) + "," + std::to_string(s.b_out);
    }
    std::string operator()(const SplitStep& s) const {
      return "split b=" + std::to_string(s.b) + " into b1=" + std::to_string(s.b1) +
             " b2=" + std::to_string(s.b2) + ", a1=" + std::to_string(s.a1) +
             " a2=" + std::to_string(s.a2);
    }
    std::string operator()(const CoprimeStep& s) const {
      return "coprime a=" + std::to_string(s.a) + " b=" + std::to_string(s.b) +
             " m=" + std::to_string(s.order) + " c=" + to_decimal(s.c) +
             " gap=" + to_decimal(s.gap_index) + " length=" + to_decimal(s.length);
    }
    std::string operator()(const RaiseStep& s) const {
      return "raise to power " + std::to_string(s.exponent) + ", gap=" + to_decimal(s.gap_index) +
             " length=" + to_decimal(s.length);
    }
    std::string operator()(const DividingStep& s) const {
      return "dividing a=" + std::to_string(s.a) + " b=" + std::to_string(s.b) +
             " c=" + to_decimal(s.c) +
             (s.gap_slot ? " gap slot=" + to_decimal(*s.gap_slot) : std::string(" gap missed")) +
             " B=" + s.block;
    }
  } visitor;
  return std::visit(visitor, step);
}

std::string SubseqTrace::to_string() const {
  std::string s = "subseq(" + input.to_string() + "," + std::to_string(a) + "," + std::to_string(b) + ")";
  for (const auto& step : steps) s += "\n  " + describe(step);
  return s;
}

SubseqResult subseq_pattern(const Pattern& p, std::uint64_t a, std::uint64_t b,
                            std::uint64_t verify_depth) {
  if (!p.is_one_gap()) throw DomainError("subseq_pattern needs a one-gap pattern");
  if (!p.is_productive()) throw DomainError("non-productive pattern: the first symbol is a gap");
  if (a == 0 || b == 0) throw DomainError("subseq_pattern needs positive a and b");

  SubseqTrace trace{p, a, b, {}};
  Pattern base = p;
  std::uint64_t A = a, B = b;
  if (p.gap_positions().front() != p.size()) {
    auto moved = gap_to_end(p);
    std::uint64_t a_out = moved.a + checked_mul64(moved.b, A - 1);
    std::uint64_t b_out = checked_mul64(B, moved.b);
    trace.steps.emplace_back(GapToEndStep{p, moved.pattern, A, B, a_out, b_out});
    base = moved.pattern;
    A = a_out;
    B = b_out;
  }

  const std::uint64_t r = base.size();
  std::uint64_t b1 = 1;
  for (auto [prime, e] : factorize(B)) {
    if (r % prime != 0) {
      for (unsigned i = 0; i < e; ++i) b1 *= prime;
    }
  }
  const std::uint64_t b2 = B / b1;
  const std::uint64_t a2 = (A + b1 - 1) / b1;
  const std::uint64_t a1 = A - (a2 - 1) * b1;
  trace.steps.emplace_back(SplitStep{A, B, a1, b1, a2, b2});

  LazyPattern cur = base;
  if (b1 > 1) {
    cur = arith_perm_coprime(base, a1, b1);
    std::uint64_t m = multiplicative_order(r % b1, b1);
    trace.steps.emplace_back(
        CoprimeStep{a1, b1, m, (cur.length() - 1) / b1, cur.gap_position(1), cur.length()});
  }

  if (b2 != 1 || a2 != 1) {
    const Length len1 = cur.length();
    const Length h1 = cur.gap_position(1);
    std::uint64_t n = 1;
    Length len = len1, gap = h1;
    while (len % b2 != 0 || gap <= a2) {
      len = checked_mul(len, len1);
      gap = checked_add(checked_mul(len1, gap - 1), h1);
      ++n;
    }
    if (n > 1) {
      cur = lazy_power(cur, n);
      trace.steps.emplace_back(RaiseStep{n, gap, len});
    }
    LazyPattern block = dividing_block(cur, a2, b2);
    std::optional<Length> slot;
    if (block.gap_count() == 1) slot = block.gap_position(1);
    trace.steps.emplace_back(DividingStep{a2, b2, block.length(), slot, block.to_string(256)});
    cur = arith_perm_dividing(cur, a2, b2);
  }

  if (verify_depth > 0) {
    auto want = subseq(toeplitz_word(p), a, b).prefix(verify_depth);
    auto got = toeplitz_prefix(cur, verify_depth);
    if (want != got) {
      auto at = std::mismatch(want.begin(), want.end(), got.begin()).first - want.begin();
      throw InternalError("subseq_pattern result disagrees with the direct subsequence at n=" +
                          std::to_string(at + 1) + "\n" + trace.to_string());
    }
  }
  return {cur, std::move(trace)};
}

LazyPattern replay_trace(const SubseqTrace& trace) {
  LazyPattern cur = trace.input;
  Pattern base = trace.input;
  for (const auto& step : trace.steps) {
    if (const auto* s = std::get_if<GapToEndStep>(&step)) {
      base = gap_to_end(base).pattern;
      if (base != s->after) throw InternalError("trace replay diverged at the gap-to-end step");
      cur = base;
    } else if (const auto* s = std::get_if<CoprimeStep>(&step)) {
      cur = arith_perm_coprime(cur, s->a, s->b);
    } else if (const auto* s = std::get_if<RaiseStep>(&step)) {
      cur = lazy_power(cur, s->exponent);
    } else if (const auto* s = std::get_if<DividingStep>(&step)) {
      cur = arith_perm_dividing(cur, s->a, s->b);
    }
  }
  return cur;
}

Pattern conjugate_by_commuting_gap(const Pattern& p, const Perm& g) {
  if (!p.is_one_gap() || !p.is_productive()) {
    throw DomainError("conjugation needs a productive one-gap pattern");
  }
  require_same_group(p.group(), g.group(), "gap conjugation");
  const Perm& f = std::get<Perm>(p[p.gap_positions().front() - 1]);
  if (!f.commutes_with(g)) {
    throw DomainError("permutation " + g.to_string() + " does not commute with the gap " + f.to_string());
  }
  std::vector<Symbol> out;
  for (const auto& s : p) {
    if (is_gap(s)) {
      out.push_back(s);
    } else {
      out.emplace_back(g(std::get<Letter>(s)));
    }
  }
  return Pattern(p.group(), std::move(out));
}

}  // namespace selfsim
