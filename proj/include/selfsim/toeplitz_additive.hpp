#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "selfsim/additive.hpp"
#include "selfsim/group.hpp"
#include "selfsim/pattern.hpp"

namespace selfsim {

/// 0, log_g 2, ..., log_g(p-1) over Z_{p-1}; for p = 2 the word 0 over Z_1.
Word lambda_word(std::uint64_t p, std::uint64_t g);

/// power((lambda_word(p, g) ⊙ c)·r_d, k) over the group of c. Throws DomainError unless
/// xi(p-1, |group|) divides c.
Pattern make_additive_pattern(std::uint64_t p, std::uint64_t g, const GroupElem& c, Letter d,
                              std::uint64_t k);

/// Parameters (p, g, c, d, k) of make_additive_pattern.
struct AdditiveEvidence {
  std::uint64_t p;
  std::uint64_t g;
  Letter c;
  Letter d;
  std::uint64_t k;
  friend bool operator==(const AdditiveEvidence&, const AdditiveEvidence&) = default;
};

enum class NonMemberReason {
  GapNotLast,
  FirstLetterNonzero,
  GapNotRotation,
  LengthNotPrimePower,
  NotAPower,
  TableCounterexample,
};

std::string to_string(NonMemberReason r);

/// w(k) != w(i) + w(j) where i·j ≡ k (mod p).
struct TableCounterexample {
  std::uint64_t i;
  std::uint64_t j;
  std::uint64_t k;
  friend bool operator==(const TableCounterexample&, const TableCounterexample&) = default;
};

struct AdditivePatternCertificate {
  bool member = false;
  /// Member whose word is constant zero: all letters 0 and the gap fixes 0.
  bool degenerate = false;
  std::optional<AdditiveEvidence> evidence;
  std::optional<NonMemberReason> reason;
  std::optional<TableCounterexample> counterexample;
  std::string detail;
};

/// Decides whether T(P) is completely additive for a productive one-gap P.
/// Gaps are compared on the subgroup generated by the letters and f(0).
AdditivePatternCertificate is_additive_pattern(const Pattern& p);

/// (Q, k) with Q an atom of prime length and power(Q, k) = P.
std::pair<Pattern, std::uint64_t> atomic_decompose(const Pattern& p);

struct GeneratorResult {
  PrimeGenerator generator;
  /// Infinitely many primes carry nonzero values.
  bool infinite;
};

/// The prime generator of a member pattern, checked against T(P).
GeneratorResult generator_of(const Pattern& p, std::uint64_t check_depth = 2048);

}  // namespace selfsim
