#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "selfsim/group.hpp"
#include "selfsim/seq.hpp"

namespace selfsim {

/// A map from primes to Z_k: either a finite table (zero elsewhere) or a
/// rule on residues modulo a fixed prime p.
class PrimeGenerator {
 public:
  enum class Kind { FiniteTable, ResidueRule };

  static PrimeGenerator finite_table(CyclicGroup group, std::map<std::uint64_t, Letter> table);
  /// `residues[i - 1]` is the value at primes q ≡ i (mod p); `at_p` is the
  /// value at p itself.
  static PrimeGenerator residue_rule(CyclicGroup group, std::uint64_t p,
                                     std::vector<Letter> residues, Letter at_p);

  Letter operator()(std::uint64_t prime) const;

  Kind kind() const noexcept { return kind_; }
  const CyclicGroup& group() const noexcept { return group_; }
  const std::map<std::uint64_t, Letter>& table() const noexcept { return table_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  const std::vector<Letter>& residues() const noexcept { return residues_; }
  Letter at_modulus() const noexcept { return at_p_; }

  /// Whether the generator maps every prime to 0.
  bool is_zero() const;

  /// `{2:1,3:1}` or `mod5{1:0,2:1,3:3,4:2;p:1}`.
  std::string to_string() const;

  friend bool operator==(const PrimeGenerator&, const PrimeGenerator&) = default;

 private:
  PrimeGenerator(CyclicGroup group, Kind kind) : group_(group), kind_(kind) {}

  CyclicGroup group_;
  Kind kind_;
  std::map<std::uint64_t, Letter> table_;
  std::uint64_t modulus_ = 0;
  std::vector<Letter> residues_;
  Letter at_p_ = 0;
};

/// The completely additive sequence n ↦ Σ_p ν_p(n)·μ(p), indexed from 1.
Seq pgs(const PrimeGenerator& mu);

/// Least pair (n, m), n <= m, n·m <= limit, in lexicographic order with
/// s(n·m) != s(n) + s(m). (1, 1) reports s(1) != 0.
std::optional<std::pair<std::uint64_t, std::uint64_t>> check_additive_prefix(const Seq& s,
                                                                            std::uint64_t limit);

struct AdditiveMembership {
  bool member;
  bool trivial;
  /// Least n with s(n) != 0, when one exists within the witness window.
  std::optional<std::uint64_t> witness;
  std::string justification;
};

inline constexpr std::uint64_t kTrivialityWindow = 4096;

/// Closed-form AS membership of (a, b) for a completely additive sequence:
/// a = b when s is nontrivial, everything otherwise.
AdditiveMembership additive_as_membership(const Seq& s, std::uint64_t a, std::uint64_t b);

}  // namespace selfsim
