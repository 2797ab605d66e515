#include "selfsim/keane.hpp"

#include <bit>

namespace selfsim {

namespace {

void require_block(const Word& u, std::size_t min_length) {
  if (u.size() < min_length) {
    throw DomainError("a Keane block needs length at least " + std::to_string(min_length));
  }
  if (u[0] != 0) throw DomainError("a Keane block must start with 0");
}

std::uint64_t mul_or_throw(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out;
  if (__builtin_mul_overflow(x, y, &out)) throw DomainError("witness overflows 64 bits");
  return out;
}

bool is_witness(std::uint64_t x, std::uint64_t y) {
  std::uint64_t xy;
  if (__builtin_mul_overflow(x, y, &xy)) return false;
  return thue_morse(y) == 0 && thue_morse(xy) == 1;
}

}  // namespace

Word keane_product(const Word& u, const Word& v) {
  require_same_group(u.group(), v.group(), "Keane product");
  std::vector<Letter> out;
  out.reserve(u.size() * v.size());
  for (Letter a : v) {
    for (Letter x : u) out.push_back(u.group().add(x, a));
  }
  return Word(u.group(), std::move(out));
}

Word keane_power(const Word& u, std::uint64_t n) {
  Word out(u.group(), {0});
  for (std::uint64_t i = 0; i < n; ++i) out = keane_product(u, out);
  return out;
}

Seq keane_word(const Word& u) {
  require_block(u, 2);
  const CyclicGroup g = u.group();
  const std::uint64_t k = u.size();
  return Seq(g, IndexBase::Zero, "keane@" + std::to_string(g.order()) + ":" + u.to_string(),
             [u, g, k](std::uint64_t n) {
               Letter acc = 0;
               for (; n > 0; n /= k) acc = g.add(acc, u[n % k]);
               return acc;
             });
}

Word diff(const Word& x) {
  if (x.empty()) throw DomainError("the difference of the empty word is undefined");
  const CyclicGroup& g = x.group();
  std::vector<Letter> out;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) out.push_back(g.sub(x[i + 1], x[i]));
  return Word(g, std::move(out));
}

Seq diff(const Seq& s) {
  const CyclicGroup g = s.group();
  const std::uint64_t lag = s.base() == IndexBase::Zero ? 1 : 0;
  return Seq(
      g, IndexBase::One, s.description() + ".diff",
      [s, g, lag](std::uint64_t n) { return g.sub(s(n + 1 - lag), s(n - lag)); },
      [s, g, lag](std::uint64_t first, std::uint64_t count) {
        auto x = s.range(first - lag, count + 1);
        std::vector<Letter> out(count);
        for (std::uint64_t i = 0; i < count; ++i) out[i] = g.sub(x[i + 1], x[i]);
        return out;
      });
}

Pattern delta_t(const Word& u) {
  require_block(u, 1);
  const CyclicGroup& g = u.group();
  Word d = diff(u);
  std::vector<Symbol> out(d.begin(), d.end());
  out.emplace_back(Perm::rotation(g, g.neg(u[u.size() - 1])));
  return Pattern(g, std::move(out));
}

Word sum_t(const Pattern& p) {
  const CyclicGroup& g = p.group();
  if (!p.is_one_gap() || p.gap_positions().front() != p.size()) {
    throw DomainError("sum_t needs letters followed by a single final gap");
  }
  auto d = std::get<Perm>(p[p.size() - 1]).rotation_amount();
  std::vector<Letter> out{0};
  for (Letter a : p.letters()) out.push_back(g.add(out.back(), a));
  if (!d || *d != g.neg(out.back())) {
    throw DomainError("sum_t needs the final gap to rotate by minus the letter sum");
  }
  return Word(g, std::move(out));
}

Letter thue_morse(std::uint64_t n) { return static_cast<Letter>(std::popcount(n) & 1); }

std::optional<std::uint64_t> carry_free_add(std::uint64_t x, std::uint64_t y) {
  if (x & y) return std::nullopt;
  return x | y;
}

std::uint64_t tm_witness(std::uint64_t x) {
  if (x < 2 || std::has_single_bit(x)) {
    throw DomainError("no witness exists for " + std::to_string(x) + ": it is a power of two");
  }
  std::uint64_t odd = x >> std::countr_zero(x);
  auto first_case = [](std::uint64_t v) {
    unsigned n = static_cast<unsigned>(std::bit_width(v)) - 1;
    if (n >= 63) throw DomainError("witness overflows 64 bits");
    return (std::uint64_t{1} << n) + 1;
  };
  std::uint64_t y = (odd & 2) == 0 ? first_case(odd) : mul_or_throw(3, first_case(mul_or_throw(3, odd)));
  if (is_witness(x, y)) return y;
  for (y = 1; y < (std::uint64_t{1} << 32); ++y) {
    if (is_witness(x, y)) return y;
  }
  throw InternalError("no Thue-Morse witness found for " + std::to_string(x));
}

bool as_morse(std::uint64_t a, std::uint64_t b) { return b > 0 && std::has_single_bit(b) && a < b; }

}  // namespace selfsim
