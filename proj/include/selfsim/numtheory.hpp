#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "selfsim/error.hpp"

namespace selfsim {

// Exact integer number theory for desk-scale inputs (< 2^63). Everything is
// deterministic: trial division, sieves and exhaustive power enumeration.

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization in increasing prime order.
using Factorization = std::vector<PrimePower>;

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Smallest prime factor of every n <= limit (entries 0 and 1 are 0).
std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit);

Factorization factorize(std::uint64_t n);
std::uint64_t multiply_out(const Factorization& f);

/// Whether n = p^k for a prime p and k >= 1; returns (p, k).
std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(std::uint64_t n);

/// max a with p^a | n. Throws DomainError if p is not prime or n == 0.
unsigned padic_val(std::uint64_t p, std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Least m >= 1 with r^m ≡ 1 (mod b); 1 when b == 1.
/// Throws DomainError when gcd(r, b) != 1.
std::uint64_t multiplicative_order(std::uint64_t r, std::uint64_t b);

bool is_primitive_root(std::uint64_t g, std::uint64_t p);

/// Smallest primitive root modulo the odd prime p.
std::uint64_t primitive_root(std::uint64_t p);

/// The unique e in [0, p-1) with g^e ≡ a (mod p).
std::uint64_t discrete_log(std::uint64_t g, std::uint64_t a, std::uint64_t p);

}  // namespace selfsim
