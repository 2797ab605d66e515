#include "selfsim/numtheory.hpp"

#include <numeric>
#include <string>

#include "selfsim/error.hpp"

namespace selfsim {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit) {
  std::vector<std::uint32_t> spf(std::size_t{limit} + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= limit; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  return spf;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("cannot factorize 0");
  Factorization f;
  for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    f.push_back({d, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

std::uint64_t multiply_out(const Factorization& f) {
  std::uint64_t n = 1;
  for (const auto& [p, e] : f) {
    for (unsigned i = 0; i < e; ++i) n *= p;
  }
  return n;
}

std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return std::make_pair(f[0].prime, f[0].exponent);
}

unsigned padic_val(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p)) throw DomainError("padic_val: " + std::to_string(p) + " is not prime");
  if (n == 0) throw DomainError("padic_val: n must be positive");
  unsigned a = 0;
  while (n % p == 0) {
    n /= p;
    ++a;
  }
  return a;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

std::uint64_t multiplicative_order(std::uint64_t r, std::uint64_t b) {
  if (b == 0) throw DomainError("multiplicative_order: modulus must be positive");
  if (std::gcd(r, b) != 1) {
    throw DomainError("multiplicative_order: gcd(" + std::to_string(r) + ", " + std::to_string(b) +
                      ") != 1");
  }
  if (b == 1) return 1;
  std::uint64_t x = r % b;
  std::uint64_t m = 1;
  while (x != 1) {
    x = mul_mod(x, r, b);
    ++m;
  }
  return m;
}

bool is_primitive_root(std::uint64_t g, std::uint64_t p) {
  if (!is_prime(p)) return false;
  g %= p;
  if (g == 0) return false;
  for (const auto& [q, e] : factorize(p - 1)) {
    if (pow_mod(g, (p - 1) / q, p) == 1) return false;
  }
  return true;
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw DomainError("primitive_root: " + std::to_string(p) + " is not an odd prime");
  }
  for (std::uint64_t g = 2; g < p; ++g) {
    if (is_primitive_root(g, p)) return g;
  }
  throw InternalError("no primitive root found modulo " + std::to_string(p));
}

std::uint64_t discrete_log(std::uint64_t g, std::uint64_t a, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("discrete_log: " + std::to_string(p) + " is not prime");
  if (a % p == 0) throw DomainError("discrete_log: argument is divisible by the modulus");
  if (p == 2) return 0;
  if (!is_primitive_root(g, p)) {
    throw DomainError("discrete_log: " + std::to_string(g) + " is not a primitive root modulo " +
                      std::to_string(p));
  }
  a %= p;
  std::uint64_t x = 1;
  for (std::uint64_t e = 0; e + 1 < p; ++e) {
    if (x == a) return e;
    x = mul_mod(x, g, p);
  }
  throw InternalError("discrete_log: exhausted powers without a match");
}

}  // namespace selfsim
