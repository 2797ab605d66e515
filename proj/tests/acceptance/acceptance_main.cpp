#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "properties.hpp"
#include "selfsim/additive.hpp"
#include "selfsim/arith_perm.hpp"
#include "selfsim/keane.hpp"
#include "selfsim/toeplitz.hpp"
#include "selfsim/toeplitz_additive.hpp"

using namespace selfsim;

namespace {

using Terms = std::vector<Letter>;

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void property(const props::Report& r) {
    expect(r.ok(), r.summary());
    cases_ += r.cases();
  }

  bool ok() const { return failures_.empty() && checks_ > 0; }
  std::string detail() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (cases_) out << ", " << cases_ << " property cases";
    for (const auto& f : failures_) out << "\n    " << f;
    return out.str();
  }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t cases_ = 0;
  std::vector<std::string> failures_;
};

std::string show(const Terms& t) {
  std::string s;
  for (Letter v : t) s += format_letter(v);
  return s;
}

void equal_terms(Check& c, const Terms& got, const Terms& want, const std::string& what) {
  c.expect(got == want, what + ": got " + show(got) + ", want " + show(want));
}

void same_text(Check& c, const std::string& got, const std::string& want, const std::string& what) {
  c.expect(got == want, what + ": got " + got + ", want " + want);
}

Terms digits(const char* text) {
  Terms out;
  for (const char* p = text; *p; ++p) {
    if (*p >= '0' && *p <= '9') out.push_back(static_cast<Letter>(*p - '0'));
  }
  return out;
}

const CyclicGroup z2(2), z3(3), z4(4), z5(5), z6(6);

Seq nu(std::uint64_t p) { return pgs(PrimeGenerator::finite_table(z2, {{p, 1}})); }

PrimeGenerator z4_rule() { return PrimeGenerator::residue_rule(z4, 5, {0, 1, 3, 2}, 1); }

void golden_prefixes(Check& c) {
  const Terms pd = digits("0100010101000100");
  equal_terms(c, toeplitz_word(parse_pattern("010?", z2)).prefix(16), pd, "T(010?)");
  equal_terms(c, nu(2).prefix(16), pd, "pgs{2:1}");

  const char* third = "0010011?0011011?";
  Terms folding = toeplitz_word(parse_pattern("0?1?", z2)).prefix(1024);
  bool consistent = true;
  for (std::size_t i = 0; i < folding.size(); ++i) {
    char want = third[i % 16];
    if (want != '?' && folding[i] != static_cast<Letter>(want - '0')) consistent = false;
  }
  c.expect(consistent, "T(0?1?) disagrees with (0010011?0011011?)^w on a defined position");

  equal_terms(c, toeplitz_word(parse_pattern("0r32r34r3", z6)).prefix(24),
              digits("032045032142032045042145"), "Hanoi T(0r32r34r3)");

  equal_terms(c, nu(2).prefix(18), digits("010001010100010001"), "table row pgs_2");
  equal_terms(c, nu(3).prefix(18), digits("001001000001001000"), "table row pgs_3");
  equal_terms(c, pgs(PrimeGenerator::finite_table(z2, {{2, 1}, {3, 1}})).prefix(18),
              digits("011000010101011001"), "table row pgs_2,3");
  equal_terms(c, pgs(z4_rule()).prefix(10), digits("0132101322"), "Z_4 residue rule");
}

void scale_invariance(Check& c) {
  Seq p = nu(2);
  for (std::uint64_t k : {2, 3, 5}) {
    auto v = similar_up_to(subseq(p, k, k), p, 1024);
    bool ok = v.similar() && std::get<Similar>(v.outcome).shift.value() == p(k);
    c.expect(ok, "subseq(p," + std::to_string(k) + "," + std::to_string(k) + "): " + v.to_string());
  }
}

void pattern_algebra(Check& c) {
  const CyclicGroup z8(8);
  same_text(c, compose(parse_pattern("0??1??", z8), parse_pattern("234567", z8)).to_string(),
            "023145067123045167", "0??1?? o 234567");
  same_text(c, power(parse_pattern("0r1", z2), 2).to_string(), "010?", "(0r1)^2");
  same_text(c, power(parse_pattern("0r32r34r3", z6), 2).to_string(), "032?450?214?", "(0r32r34r3)^2");
  c.property(props::composition_size_formulas());
  c.property(props::composition_monoid_random());
}

void classification(Check& c) {
  same_text(c, lambda_word(7, 3).to_string(), "021453", "lambda_7,3");
  same_text(c, lambda_word(7, 5).to_string(), "045213", "lambda_7,5");
  for (std::uint64_t g : {3, 5}) {
    for (Letter cv = 0; cv < 4; ++cv) {
      for (Letter d = 0; d < 4; ++d) {
        bool built = true;
        try {
          make_additive_pattern(7, g, GroupElem(z4, cv), d, 1);
        } catch (const DomainError&) {
          built = false;
        }
        c.expect(built == (cv % 2 == 0), "make_additive_pattern(7," + std::to_string(g) + ",c=" +
                                             std::to_string(cv) + ",d=" + std::to_string(d) + ")");
      }
    }
  }
  auto member = is_additive_pattern(parse_pattern("002022r3", z4));
  c.expect(member.member, "002022r3 should be a member");
  auto non = is_additive_pattern(parse_pattern("023031r3", z4));
  c.expect(!non.member && non.reason == NonMemberReason::TableCounterexample && non.counterexample.has_value(),
           "023031r3 should fail with a table counterexample: " + non.detail);
  c.property(props::classification_matches_prefix_check());

  Pattern binary = parse_pattern("001011r1", z2);
  GeneratorResult gr = generator_of(binary, 2048);
  PrimeGenerator want = PrimeGenerator::residue_rule(z2, 7, {0, 0, 1, 0, 1, 1}, 1);
  c.expect(gr.generator == want, "generator_of(001011r1) = " + gr.generator.to_string());
  equal_terms(c, pgs(want).prefix(2048), toeplitz_word(binary).prefix(2048), "pgs(rule) vs T(001011r1)");
}

void falsification_scan(Check& c) {
  std::vector<std::pair<std::string, Seq>> seqs = {
      {"pgs_2", nu(2)},
      {"pgs_3", nu(3)},
      {"pgs_2,3", pgs(PrimeGenerator::finite_table(z2, {{2, 1}, {3, 1}}))},
      {"Z_4 rule", pgs(z4_rule())},
  };
  for (const auto& [name, s] : seqs) {
    for (const auto& cell : as_scan(s, 10, 10, 4096)) {
      c.expect(cell.verdict.similar() == (cell.a == cell.b),
               name + " (" + std::to_string(cell.a) + "," + std::to_string(cell.b) + "): " +
                   cell.verdict.to_string());
    }
  }
}

void arithmetic_subsequences(Check& c) {
  Pattern p = parse_pattern("0123r2", z5);
  same_text(c, subseq_pattern(p, 2, 2).pattern.to_string(), "1302r2", "P_2,2");

  const std::string listed = "1302r4130201302213024" "13021";
  std::string computed = subseq_pattern(p, 2, 12).pattern.to_string();
  if (computed != listed) {
    Terms want = oracle::progression(toeplitz_prefix(p, 2 + 12 * 400), 2, 12, 400);
    Terms from_listing = toeplitz_prefix(parse_pattern(listed, z5), 400);
    std::size_t n = 0;
    while (n < want.size() && want[n] == from_listing[n]) ++n;
    c.expect(false, "P_2,12: listed " + listed + ", computed " + computed +
                        "; T(listed) leaves the progression at n=" + std::to_string(n + 1));
  }
  c.expect(toeplitz_prefix(parse_pattern(computed, z5), 400) ==
               oracle::progression(toeplitz_prefix(p, 2 + 12 * 400), 2, 12, 400),
           "computed P_2,12 generates the progression");

  Pattern q = parse_pattern("0r112", z3);
  same_text(c, dividing_block(LazyPattern(power(q, 2)), 2, 2).to_string(), "12r222202", "block B");
  LazyPattern composite = arith_perm_dividing(LazyPattern(power(q, 2)), 2, 2);
  c.expect(composite.length() == 128 && composite.gap_count() == 8,
           "composite pattern has length " + to_decimal(composite.length()) + " and " +
               to_decimal(composite.gap_count()) + " gaps");
  c.expect(toeplitz_word(composite).prefix(2000) == oracle::progression(toeplitz_prefix(q, 2 + 2 * 2000), 2, 2, 2000),
           "composite pattern generates the progression");
  c.property(props::subseq_pattern_random());
}

void keane_suite(Check& c) {
  const Word w00(z2, {0, 0}), w01(z2, {0, 1}), w001(z2, {0, 0, 1});
  same_text(c, keane_product(w00, w01).to_string(), "0011", "00 x 01");
  same_text(c, keane_product(w01, w00).to_string(), "0101", "01 x 00");
  equal_terms(c, keane_word(w01).prefix(16), digits("0110100110010110"), "K(01)");
  c.property(props::digit_formula_matches_iteration());
  c.property(props::delta_embedding_homomorphism());
  c.property(props::difference_is_toeplitz());
  equal_terms(c, diff(keane_word(w01)).prefix(1024), shift_const(nu(2), z2.elem(1)).prefix(1024),
              "diff K(01) = pgs_2 + 1");
  Terms d001 = diff(keane_word(w001)).prefix(2048);
  equal_terms(c, toeplitz_prefix(parse_pattern("01r1", z2), 2048), d001, "T(01r1) = diff K(001)");
  equal_terms(c, pgs(PrimeGenerator::residue_rule(z2, 3, {0, 1}, 1)).prefix(2048), d001,
              "pgs(mod 3 rule) = diff K(001)");
}

void thue_morse_suite(Check& c) {
  Seq tm = keane_word(Word(z2, {0, 1}));
  for (const auto& cell : as_scan(tm, 63, 64, 65536)) {
    if (cell.a >= cell.b) continue;
    c.expect(cell.verdict.similar() == as_morse(cell.a, cell.b),
             "K(01) (" + std::to_string(cell.a) + "," + std::to_string(cell.b) + "): " + cell.verdict.to_string());
  }
  for (std::uint64_t x = 1; x <= 100; ++x) {
    if ((x & (x - 1)) == 0) continue;
    std::uint64_t y = tm_witness(x);
    c.expect(y > 0 && oracle::popcount(y) % 2 == 0 && oracle::popcount(x * y) % 2 == 1,
             "tm_witness(" + std::to_string(x) + ") = " + std::to_string(y));
  }
}

void property_suites(Check& c) {
  for (const auto& entry : props::all()) c.property(entry.run());
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria = {
      {"golden prefixes", golden_prefixes},
      {"scale invariance of period doubling", scale_invariance},
      {"pattern algebra", pattern_algebra},
      {"classification of additive patterns", classification},
      {"arithmetic self-similarity of additive sequences", falsification_scan},
      {"arithmetic subsequence patterns", arithmetic_subsequences},
      {"Keane words and their differences", keane_suite},
      {"Thue-Morse self-similarity and witnesses", thue_morse_suite},
      {"property suites", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = check.ok();
    if (!ok) ++failed;
    std::printf("%s criterion %zu: %s (%.2fs)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first, secs);
    std::printf("    %s\n", check.detail().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
