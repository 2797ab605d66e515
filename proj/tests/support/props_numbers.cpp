#include <algorithm>
#include <numeric>

#include "generators.hpp"
#include "oracles.hpp"
#include "properties.hpp"
#include "selfsim/group.hpp"
#include "selfsim/numtheory.hpp"

using namespace selfsim;

namespace props {

Report xi_lcm_identity() {
  Report r("n*xi(n,m) = m*xi(m,n) = lcm(n,m)");
  for (std::uint64_t n = 1; n <= 60; ++n) {
    for (std::uint64_t m = 1; m <= 60; ++m) {
      std::uint64_t l = std::lcm(n, m);
      r.expect(n * xi(n, m) == l && m * xi(m, n) == l,
               [&] { return "n=" + std::to_string(n) + " m=" + std::to_string(m); });
    }
  }
  return r;
}

Report perm_group_laws() {
  Report r("permutations form a group");
  auto check = [&](const Perm& f, const Perm& g, const Perm& h) {
    const CyclicGroup& grp = f.group();
    Perm id = Perm::identity(grp);
    r.expect(f.compose(g).compose(h) == f.compose(g.compose(h)) && f.compose(id) == f &&
                 id.compose(f) == f && f.compose(f.inverse()) == id && f.inverse().compose(f) == id,
             [&] { return f.to_string() + " " + g.to_string() + " " + h.to_string(); });
  };
  for (std::uint32_t k = 1; k <= 4; ++k) {
    CyclicGroup grp(k);
    std::vector<Perm> perms;
    std::vector<Letter> t(k);
    std::iota(t.begin(), t.end(), Letter{0});
    do {
      perms.push_back(Perm::from_table(grp, t));
    } while (std::next_permutation(t.begin(), t.end()));
    for (const auto& f : perms) {
      for (const auto& g : perms) {
        for (const auto& h : perms) check(f, g, h);
      }
    }
  }
  gen::Rng rng(11);
  for (std::uint32_t k = 5; k <= 9; ++k) {
    CyclicGroup grp(k);
    for (int i = 0; i < 100; ++i) check(gen::perm(rng, grp), gen::perm(rng, grp), gen::perm(rng, grp));
  }
  return r;
}

Report rotation_addition() {
  Report r("r_d o r_e = r_(d+e)");
  for (std::uint32_t k = 1; k <= 6; ++k) {
    CyclicGroup g(k);
    for (Letter d = 0; d < k; ++d) {
      for (Letter e = 0; e < k; ++e) {
        Perm lhs = Perm::rotation(g, d).compose(Perm::rotation(g, e));
        r.expect(lhs == Perm::rotation(g, (d + e) % k) && lhs.rotation_amount() == (d + e) % k,
                 [&] { return "k=" + std::to_string(k) + " d=" + std::to_string(d); });
      }
    }
  }
  return r;
}

Report scaling_homomorphism() {
  Report r("a -> a*c is a homomorphism iff xi | c");
  for (std::uint64_t n = 2; n <= 8; ++n) {
    for (std::uint32_t m = 1; m <= 8; ++m) {
      CyclicGroup gm(m);
      for (Letter c = 0; c < m; ++c) {
        bool hom = true;
        for (std::uint64_t a = 0; a < n; ++a) {
          for (std::uint64_t b = 0; b < n; ++b) {
            hom = hom && gm.scalar((a + b) % n, c) == gm.add(gm.scalar(a, c), gm.scalar(b, c));
          }
        }
        r.expect(hom == ghom_is_homomorphism(n, m, GroupElem(gm, c)), [&] {
          return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " c=" + std::to_string(c);
        });
      }
    }
  }
  return r;
}

namespace {

std::vector<std::uint64_t> roots_of(std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t g = 1; g < p; ++g) {
    if (oracle::generates(g, p)) out.push_back(g);
  }
  return out;
}

}  // namespace

Report log_base_change() {
  Report r("log_g(a) = log_g(h) log_h(a) mod p-1");
  for (std::uint64_t p = 3; p <= 31; ++p) {
    if (!oracle::prime(p)) continue;
    auto roots = roots_of(p);
    for (std::uint64_t g : roots) {
      for (std::uint64_t h : roots) {
        for (std::uint64_t a = 1; a < p; ++a) {
          std::uint64_t lhs = discrete_log(g, a, p);
          std::uint64_t rhs = discrete_log(g, h, p) * discrete_log(h, a, p) % (p - 1);
          r.expect(lhs == rhs, [&] {
            return "p=" + std::to_string(p) + " g=" + std::to_string(g) + " h=" + std::to_string(h);
          });
        }
      }
    }
  }
  return r;
}

Report fermat_little() {
  Report r("a^(p-1) = 1 mod p");
  for (std::uint64_t p = 2; p <= 100; ++p) {
    if (!oracle::prime(p)) continue;
    for (std::uint64_t a = 1; a < p; ++a) {
      r.expect(pow_mod(a, p - 1, p) == 1, [&] { return "p=" + std::to_string(p) + " a=" + std::to_string(a); });
    }
  }
  return r;
}

Report root_half_order() {
  Report r("smallest primitive root g has g^((p-1)/2) = -1");
  for (std::uint64_t p = 3; p <= 100; ++p) {
    if (!oracle::prime(p)) continue;
    std::uint64_t g = primitive_root(p);
    r.expect(g == roots_of(p).front() && pow_mod(g, (p - 1) / 2, p) == p - 1,
             [&] { return "p=" + std::to_string(p) + " g=" + std::to_string(g); });
    for (std::uint64_t h = 1; h < p; ++h) {
      r.expect(is_primitive_root(h, p) == oracle::generates(h, p),
               [&] { return "p=" + std::to_string(p) + " h=" + std::to_string(h); });
    }
  }
  return r;
}

Report factorization_round_trip() {
  Report r("factorize then multiply is the identity");
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    Factorization f = factorize(n);
    bool shape = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
      shape = shape && f[i].exponent >= 1 && (i == 0 || f[i - 1].prime < f[i].prime);
      if (n <= 2000) shape = shape && oracle::prime(f[i].prime);
    }
    r.expect(shape && multiply_out(f) == n, [&] { return "n=" + std::to_string(n); });
  }
  return r;
}

Report valuation_product() {
  Report r("n = prod p^v_p(n)");
  auto primes = primes_up_to(5000);
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    std::uint64_t prod = 1;
    for (std::uint64_t p : primes) {
      if (p > n) break;
      unsigned v = padic_val(p, n);
      r.expect(v == oracle::valuation(p, n), [&] { return "p=" + std::to_string(p) + " n=" + std::to_string(n); });
      for (unsigned i = 0; i < v; ++i) prod *= p;
    }
    r.expect(prod == n, [&] { return "n=" + std::to_string(n); });
  }
  return r;
}

Report discrete_log_matches_search() {
  Report r("discrete_log agrees with exhaustive search");
  for (std::uint64_t p = 3; p <= 100; ++p) {
    if (!oracle::prime(p)) continue;
    for (std::uint64_t g : roots_of(p)) {
      for (std::uint64_t a = 1; a < p; ++a) {
        r.expect(discrete_log(g, a, p) == oracle::log_by_search(g, a, p), [&] {
          return "p=" + std::to_string(p) + " g=" + std::to_string(g) + " a=" + std::to_string(a);
        });
      }
    }
  }
  return r;
}

Report order_is_minimal() {
  Report r("multiplicative order is the least m with r^m = 1");
  for (std::uint64_t b = 1; b <= 60; ++b) {
    for (std::uint64_t x = 1; x <= 60; ++x) {
      if (std::gcd(x, b) != 1) continue;
      std::uint64_t m = multiplicative_order(x, b);
      bool ok = oracle::power_mod(x, m, b) == 1 % b;
      for (std::uint64_t e = 1; e < m; ++e) ok = ok && oracle::power_mod(x, e, b) != 1 % b;
      r.expect(ok, [&] { return "r=" + std::to_string(x) + " b=" + std::to_string(b); });
    }
  }
  return r;
}

}  // namespace props
