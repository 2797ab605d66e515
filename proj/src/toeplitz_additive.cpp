#include "selfsim/toeplitz_additive.hpp"

#include <algorithm>
#include <numeric>

#include "selfsim/numtheory.hpp"
#include "selfsim/toeplitz.hpp"

namespace selfsim {

namespace {

void require_generator(std::uint64_t p, std::uint64_t g) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p == 2) {
    if (g != 1) throw DomainError("the primitive root modulo 2 is 1");
  } else if (!is_primitive_root(g, p)) {
    throw DomainError(std::to_string(g) + " is not a primitive root modulo " + std::to_string(p));
  }
}

/// Generator of the subgroup spanned by the letters of P and f(0).
Letter occurring_step(const Pattern& p, Letter d) {
  std::uint64_t step = p.group().order();
  for (Letter a : p.letters()) step = std::gcd(step, std::uint64_t{a});
  return static_cast<Letter>(std::gcd(step, std::uint64_t{d}));
}

bool rotation_on_subgroup(const Perm& f, Letter d, Letter step) {
  const CyclicGroup& g = f.group();
  for (Letter x = 0; x < g.order(); x += step) {
    if (f(x) != g.add(x, d)) return false;
  }
  return true;
}

AdditivePatternCertificate non_member(NonMemberReason why, std::string detail) {
  AdditivePatternCertificate c;
  c.reason = why;
  c.detail = std::move(detail);
  return c;
}

Pattern atom_from_prefix(const Pattern& p, std::uint64_t prime) {
  std::vector<Symbol> out(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(prime - 1));
  out.emplace_back(Perm::rotation(p.group(), std::get<Letter>(p[prime - 1])));
  return Pattern(p.group(), std::move(out));
}

/// Literal equality, except that gaps need only agree on the subgroup
/// generated by `step`.
bool same_on_subgroup(const Pattern& x, const Pattern& y, Letter step) {
  if (x.size() != y.size()) return false;
  std::vector<Letter> subgroup;
  for (Letter v = 0; v < x.group().order(); v += step) subgroup.push_back(v);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto* f = std::get_if<Perm>(&x[i]);
    const auto* g = std::get_if<Perm>(&y[i]);
    if (!f && !g) {
      if (x[i] != y[i]) return false;
    } else if (!f || !g || !f->agrees_on(*g, subgroup)) {
      return false;
    }
  }
  return true;
}

}  // namespace

Word lambda_word(std::uint64_t p, std::uint64_t g) {
  require_generator(p, g);
  if (p == 2) return Word(CyclicGroup(1), {0});
  std::vector<Letter> out;
  for (std::uint64_t i = 1; i < p; ++i) out.push_back(static_cast<Letter>(discrete_log(g, i, p)));
  return Word(CyclicGroup(static_cast<std::uint32_t>(p - 1)), std::move(out));
}

Pattern make_additive_pattern(std::uint64_t p, std::uint64_t g, const GroupElem& c, Letter d,
                              std::uint64_t k) {
  require_generator(p, g);
  const CyclicGroup& group = c.group();
  group.check(d);
  if (k == 0) throw DomainError("the power of an additive pattern must be positive");
  if (!ghom_is_homomorphism(p - 1, group.order(), c)) {
    throw DomainError("xi(" + std::to_string(p - 1) + ", " + std::to_string(group.order()) +
                      ") = " + std::to_string(xi(p - 1, group.order())) + " does not divide c = " +
                      std::to_string(c.value()));
  }
  Word letters = scale(lambda_word(p, g), c);
  std::vector<Symbol> atom(letters.begin(), letters.end());
  atom.emplace_back(Perm::rotation(group, d));
  return power(Pattern(group, std::move(atom)), k);
}

std::string to_string(NonMemberReason r) {
  switch (r) {
    case NonMemberReason::GapNotLast: return "gap-not-last";
    case NonMemberReason::FirstLetterNonzero: return "first-letter-nonzero";
    case NonMemberReason::GapNotRotation: return "gap-not-rotation";
    case NonMemberReason::LengthNotPrimePower: return "length-not-prime-power";
    case NonMemberReason::NotAPower: return "not-a-power";
    case NonMemberReason::TableCounterexample: return "multiplicative-table";
  }
  return "unknown";
}

AdditivePatternCertificate is_additive_pattern(const Pattern& p) {
  if (!p.is_one_gap()) {
    throw DomainError("classification needs exactly one gap, got " + std::to_string(p.gap_count()));
  }
  if (!p.is_productive()) throw DomainError("non-productive pattern: the first symbol is a gap");
  const CyclicGroup& group = p.group();
  const std::size_t len = p.size();
  const std::size_t hole = p.gap_positions().front();
  const Perm& f = std::get<Perm>(p[hole - 1]);
  const Letter d = f(0);
  const auto letters = p.letters();

  bool all_zero = std::all_of(letters.begin(), letters.end(), [](Letter a) { return a == 0; });
  if (all_zero && d == 0) {
    AdditivePatternCertificate c;
    c.member = true;
    c.degenerate = true;
    c.detail = "all letters are 0 and the gap fixes 0; the word is constant 0";
    return c;
  }
  if (hole != len) {
    return non_member(NonMemberReason::GapNotLast,
                      "gap at position " + std::to_string(hole) + " of " + std::to_string(len));
  }
  if (letters.front() != 0) {
    return non_member(NonMemberReason::FirstLetterNonzero,
                      "first letter is " + std::to_string(letters.front()));
  }
  const Letter step = occurring_step(p, d);
  if (!rotation_on_subgroup(f, d, step)) {
    return non_member(NonMemberReason::GapNotRotation,
                      "gap " + f.to_string() + " is not r" + std::to_string(d) +
                          " on the multiples of " + std::to_string(step));
  }
  auto pp = as_prime_power(len);
  if (!pp) {
    return non_member(NonMemberReason::LengthNotPrimePower,
                      "length " + std::to_string(len) + " is not a prime power");
  }
  auto [prime, k] = *pp;

  Letter atom_d = d;
  if (k >= 2) {
    Pattern q = atom_from_prefix(p, prime);
    atom_d = std::get<Letter>(p[prime - 1]);
    if (power(q, k).letters() != letters || group.scalar(k, atom_d) != d) {
      return non_member(NonMemberReason::NotAPower,
                        "not the " + std::to_string(k) + "-th power of " + q.to_string());
    }
  }

  // Multiplicative table on Z_p^x: w(i·j mod p) = w(i) + w(j).
  auto w = [&](std::uint64_t i) { return letters[i - 1]; };
  for (std::uint64_t i = 1; i < prime; ++i) {
    for (std::uint64_t j = i; j < prime; ++j) {
      std::uint64_t ij = i * j % prime;
      if (w(ij) != group.add(w(i), w(j))) {
        auto c = non_member(NonMemberReason::TableCounterexample,
                            "w(" + std::to_string(ij) + ") != w(" + std::to_string(i) + ") + w(" +
                                std::to_string(j) + ")");
        c.counterexample = TableCounterexample{i, j, ij};
        return c;
      }
    }
  }

  std::uint64_t g = prime == 2 ? 1 : primitive_root(prime);
  AdditivePatternCertificate c;
  c.member = true;
  c.evidence = AdditiveEvidence{prime, g, w(g), atom_d, k};
  c.detail = "power of an atom over the discrete logarithm modulo " + std::to_string(prime);
  return c;
}

std::pair<Pattern, std::uint64_t> atomic_decompose(const Pattern& p) {
  auto cert = is_additive_pattern(p);
  if (!cert.member || !cert.evidence) {
    throw DomainError("atomic decomposition needs a nontrivial member of prime-power length");
  }
  const auto& ev = *cert.evidence;
  if (ev.k == 1) return {p, 1};
  Pattern q = atom_from_prefix(p, ev.p);
  const Perm& f = std::get<Perm>(p[p.size() - 1]);
  if (!same_on_subgroup(power(q, ev.k), p, occurring_step(p, f(0)))) {
    throw InternalError("atom " + q.to_string() + " does not rebuild " + p.to_string());
  }
  return {q, ev.k};
}

GeneratorResult generator_of(const Pattern& p, std::uint64_t check_depth) {
  auto cert = is_additive_pattern(p);
  if (!cert.member) throw DomainError("pattern " + p.to_string() + " is not additive: " + cert.detail);
  const CyclicGroup& group = p.group();
  if (cert.degenerate) return {PrimeGenerator::finite_table(group, {}), false};
  const auto& ev = *cert.evidence;
  std::vector<Letter> residues;
  for (std::uint64_t i = 1; i < ev.p; ++i) residues.push_back(std::get<Letter>(p[i - 1]));
  auto mu = PrimeGenerator::residue_rule(group, ev.p, std::move(residues), ev.d);
  if (pgs(mu).prefix(check_depth) != toeplitz_prefix(p, check_depth)) {
    throw InternalError("generator " + mu.to_string() + " disagrees with T(" + p.to_string() + ")");
  }
  return {mu, ev.c != 0 && ev.p > 2};
}

}  // namespace selfsim
