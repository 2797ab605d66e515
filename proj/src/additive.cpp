#include "selfsim/additive.hpp"

#include "selfsim/numtheory.hpp"

namespace selfsim {

namespace {

constexpr std::uint64_t kSieveLimit = std::uint64_t{1} << 24;

}  // namespace

PrimeGenerator PrimeGenerator::finite_table(CyclicGroup group,
                                            std::map<std::uint64_t, Letter> table) {
  for (auto [p, v] : table) {
    if (!is_prime(p)) throw DomainError("generator key " + std::to_string(p) + " is not prime");
    group.check(v);
  }
  PrimeGenerator g(group, Kind::FiniteTable);
  g.table_ = std::move(table);
  return g;
}

PrimeGenerator PrimeGenerator::residue_rule(CyclicGroup group, std::uint64_t p,
                                            std::vector<Letter> residues, Letter at_p) {
  if (!is_prime(p)) throw DomainError("residue rule modulus " + std::to_string(p) + " is not prime");
  if (residues.size() != p - 1) {
    throw DomainError("residue rule mod " + std::to_string(p) + " needs values for residues 1.." +
                      std::to_string(p - 1));
  }
  for (Letter v : residues) group.check(v);
  group.check(at_p);
  PrimeGenerator g(group, Kind::ResidueRule);
  g.modulus_ = p;
  g.residues_ = std::move(residues);
  g.at_p_ = at_p;
  return g;
}

Letter PrimeGenerator::operator()(std::uint64_t prime) const {
  if (kind_ == Kind::FiniteTable) {
    auto it = table_.find(prime);
    return it == table_.end() ? 0 : it->second;
  }
  std::uint64_t r = prime % modulus_;
  return r == 0 ? at_p_ : residues_[r - 1];
}

bool PrimeGenerator::is_zero() const {
  if (kind_ == Kind::FiniteTable) {
    for (auto [p, v] : table_) {
      if (v != 0) return false;
    }
    return true;
  }
  if (at_p_ != 0) return false;
  // Every residue class coprime to p contains primes.
  for (Letter v : residues_) {
    if (v != 0) return false;
  }
  return true;
}

std::string PrimeGenerator::to_string() const {
  std::string s;
  if (kind_ == Kind::FiniteTable) {
    s = "{";
    bool first = true;
    for (auto [p, v] : table_) {
      if (!first) s += ',';
      first = false;
      s += std::to_string(p) + ":" + std::to_string(v);
    }
    return s + "}";
  }
  s = "mod" + std::to_string(modulus_) + "{";
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(i + 1) + ":" + std::to_string(residues_[i]);
  }
  return s + ";p:" + std::to_string(at_p_) + "}";
}

Seq pgs(const PrimeGenerator& mu) {
  CyclicGroup g = mu.group();
  auto nth = [mu, g](std::uint64_t n) {
    Letter acc = 0;
    for (auto [p, e] : factorize(n)) acc = g.add(acc, g.scalar(e, mu(p)));
    return acc;
  };
  auto range = [mu, g, nth](std::uint64_t first, std::uint64_t count) {
    std::vector<Letter> out;
    if (count == 0) return out;
    std::uint64_t last = first + count - 1;
    out.reserve(count);
    if (last > kSieveLimit) {
      for (std::uint64_t n = first; n <= last; ++n) out.push_back(nth(n));
      return out;
    }
    auto spf = smallest_prime_factors(static_cast<std::uint32_t>(last));
    std::vector<Letter> all(last + 1, 0);
    for (std::uint64_t n = 2; n <= last; ++n) {
      std::uint64_t p = spf[n];
      all[n] = g.add(all[n / p], mu(p));
    }
    out.assign(all.begin() + static_cast<std::ptrdiff_t>(first), all.end());
    return out;
  };
  return Seq(g, IndexBase::One, "pgs@" + std::to_string(g.order()) + ":" + mu.to_string(), nth,
             range);
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> check_additive_prefix(const Seq& s,
                                                                            std::uint64_t limit) {
  if (s.base() != IndexBase::One) throw DomainError("additivity is checked on 1-based sequences");
  if (limit == 0) throw DomainError("additivity check needs a positive limit");
  const CyclicGroup& g = s.group();
  auto x = s.prefix(limit);
  auto at = [&](std::uint64_t n) { return x[n - 1]; };
  for (std::uint64_t n = 1; n * n <= limit; ++n) {
    for (std::uint64_t m = n; n * m <= limit; ++m) {
      if (at(n * m) != g.add(at(n), at(m))) return std::pair{n, m};
    }
  }
  return std::nullopt;
}

AdditiveMembership additive_as_membership(const Seq& s, std::uint64_t a, std::uint64_t b) {
  if (s.base() != IndexBase::One) throw DomainError("additive sequences are 1-based");
  if (a == 0 || b == 0) throw DomainError("AS pairs need positive a and b");
  auto x = s.prefix(kTrivialityWindow);
  std::optional<std::uint64_t> witness;
  for (std::uint64_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) {
      witness = i + 1;
      break;
    }
  }
  if (!witness) {
    return {true, true, std::nullopt,
            "no nonzero term among the first " + std::to_string(kTrivialityWindow) +
                "; the sequence is constant 0 and similar to every subsequence"};
  }
  std::string why = "nontrivial (s(" + std::to_string(*witness) + ") != 0): ";
  if (a == b) {
    why += "s(" + std::to_string(b) + "n) = s(n) + s(" + std::to_string(b) + ")";
  } else {
    why += "only pairs (b,b) are self-similar";
  }
  return {a == b, false, witness, why};
}

}  // namespace selfsim
