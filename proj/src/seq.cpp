#include "selfsim/seq.hpp"

#include <algorithm>
#include <future>
#include <ostream>
#include <thread>

namespace selfsim {

Seq::Seq(CyclicGroup group, IndexBase base, std::string description, Evaluator eval,
         RangeEvaluator range)
    : group_(group),
      base_(base),
      description_(std::move(description)),
      eval_(std::move(eval)),
      range_(std::move(range)) {
  if (!eval_) throw DomainError("sequence needs an evaluator");
}

Letter Seq::operator()(std::uint64_t n) const {
  if (n < first_index()) {
    throw DomainError("index " + std::to_string(n) + " is below the first index " +
                      std::to_string(first_index()));
  }
  return eval_(n);
}

std::vector<Letter> Seq::range(std::uint64_t first, std::uint64_t count) const {
  if (first < first_index()) {
    throw DomainError("index " + std::to_string(first) + " is below the first index " +
                      std::to_string(first_index()));
  }
  if (range_) return range_(first, count);
  std::vector<Letter> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(eval_(first + i));
  return out;
}

Seq constant_seq(const CyclicGroup& group, IndexBase base, Letter value) {
  group.check(value);
  return Seq(group, base, "const(" + std::to_string(value) + ")",
             [value](std::uint64_t) { return value; });
}

Seq ultimately_periodic(const Word& preperiod, const Word& period, IndexBase base) {
  require_same_group(preperiod.group(), period.group(), "ultimately periodic sequence");
  if (period.empty()) throw DomainError("period must be nonempty");
  std::string desc = preperiod.to_string() + "(" + period.to_string() + ")^w";
  auto first = static_cast<std::uint64_t>(base);
  return Seq(period.group(), base, std::move(desc), [preperiod, period, first](std::uint64_t n) {
    std::uint64_t i = n - first;
    if (i < preperiod.size()) return preperiod[i];
    return period[(i - preperiod.size()) % period.size()];
  });
}

Seq rebase(const Seq& s, IndexBase base) {
  if (base == s.base()) return s;
  std::uint64_t from = s.first_index();
  std::uint64_t to = static_cast<std::uint64_t>(base);
  return Seq(
      s.group(), base, s.description(),
      [s, from, to](std::uint64_t n) { return s(n - to + from); },
      [s, from, to](std::uint64_t first, std::uint64_t count) {
        return s.range(first - to + from, count);
      });
}

Seq subseq(const Seq& s, std::uint64_t a, std::uint64_t b) {
  if (b == 0) throw DomainError("subsequence step must be positive");
  if (a < s.first_index()) {
    throw DomainError("subsequence offset " + std::to_string(a) + " is below the first index");
  }
  if (b == 1 && a == s.first_index()) return s;
  std::uint64_t first = s.first_index();
  std::string desc = s.description() + ".subseq(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return Seq(s.group(), s.base(), std::move(desc),
             [s, a, b, first](std::uint64_t n) { return s(a + b * (n - first)); });
}

Seq add(const Seq& s, const Seq& t) {
  require_same_group(s.group(), t.group(), "sequence addition");
  if (s.base() != t.base()) throw DomainError("sequence addition needs equal index bases");
  CyclicGroup g = s.group();
  return Seq(
      g, s.base(), s.description() + ".add(" + t.description() + ")",
      [s, t, g](std::uint64_t n) { return g.add(s(n), t(n)); },
      [s, t, g](std::uint64_t first, std::uint64_t count) {
        auto x = s.range(first, count);
        auto y = t.range(first, count);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = g.add(x[i], y[i]);
        return x;
      });
}

Seq shift_const(const Seq& s, const GroupElem& c) {
  require_same_group(s.group(), c.group(), "constant shift");
  CyclicGroup g = s.group();
  Letter v = c.value();
  return Seq(
      g, s.base(), s.description() + ".plus(" + std::to_string(v) + ")",
      [s, g, v](std::uint64_t n) { return g.add(s(n), v); },
      [s, g, v](std::uint64_t first, std::uint64_t count) {
        auto x = s.range(first, count);
        for (auto& e : x) e = g.add(e, v);
        return x;
      });
}

Seq scale(const Seq& s, const GroupElem& c) {
  CyclicGroup g = c.group();
  Letter v = c.value();
  return Seq(
      g, s.base(),
      s.description() + ".scale(" + std::to_string(v) + "," + std::to_string(g.order()) + ")",
      [s, g, v](std::uint64_t n) { return g.scalar(s(n), v); },
      [s, g, v](std::uint64_t first, std::uint64_t count) {
        auto x = s.range(first, count);
        for (auto& e : x) e = g.scalar(e, v);
        return x;
      });
}

Seq reduce_mod(const Seq& s, std::uint32_t k) {
  if (k == 0 || s.group().order() % k != 0) {
    throw DomainError("mod(" + std::to_string(k) + ") needs a divisor of " +
                      std::to_string(s.group().order()));
  }
  return Seq(
      CyclicGroup(k), s.base(), s.description() + ".mod(" + std::to_string(k) + ")",
      [s, k](std::uint64_t n) { return s(n) % k; },
      [s, k](std::uint64_t first, std::uint64_t count) {
        auto x = s.range(first, count);
        for (auto& e : x) e %= k;
        return x;
      });
}

std::string SimilarityVerdict::to_string() const {
  if (auto* ok = std::get_if<Similar>(&outcome)) {
    return "similar c=" + std::to_string(ok->shift.value()) + " depth=" + std::to_string(depth);
  }
  const auto& m = std::get<Mismatch>(outcome);
  return "mismatch at n=" + std::to_string(m.index) + " expected=" +
         std::to_string(m.expected.value()) + " found=" + std::to_string(m.found.value());
}

namespace {

SimilarityVerdict compare_terms(const CyclicGroup& g, std::uint64_t first,
                                const std::vector<Letter>& s, const std::vector<Letter>& t) {
  std::uint64_t depth = s.size();
  Letter c = depth ? g.sub(s[0], t[0]) : 0;
  for (std::uint64_t i = 0; i < depth; ++i) {
    Letter want = g.add(t[i], c);
    if (s[i] != want) {
      return {Mismatch{first + i, GroupElem(g, want), GroupElem(g, s[i])}, depth};
    }
  }
  return {Similar{GroupElem(g, c)}, depth};
}

}  // namespace

SimilarityVerdict similar_up_to(const Seq& s, const Seq& t, std::uint64_t depth) {
  require_same_group(s.group(), t.group(), "similarity check");
  if (s.base() != t.base()) throw DomainError("similarity check needs equal index bases");
  return compare_terms(s.group(), s.first_index(), s.prefix(depth), t.prefix(depth));
}

std::vector<ScanCell> as_scan(const Seq& s, std::uint64_t a_max, std::uint64_t b_max,
                              std::uint64_t depth) {
  if (a_max == 0 || b_max == 0 || depth == 0) throw DomainError("scan bounds must be positive");
  std::uint64_t first = s.first_index();
  if (a_max < first) return {};
  std::uint64_t last = a_max + b_max * (depth - 1);
  const std::vector<Letter> terms = s.prefix(last - first + 1);
  auto at = [&](std::uint64_t n) { return terms[n - first]; };
  std::vector<Letter> base(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(depth));

  auto row = [&](std::uint64_t a) {
    std::vector<ScanCell> cells;
    std::vector<Letter> sub(depth);
    for (std::uint64_t b = 1; b <= b_max; ++b) {
      for (std::uint64_t i = 0; i < depth; ++i) sub[i] = at(a + b * i);
      cells.push_back({a, b, compare_terms(s.group(), first, sub, base)});
    }
    return cells;
  };

  std::vector<std::uint64_t> rows;
  for (std::uint64_t a = first; a <= a_max; ++a) rows.push_back(a);
  unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                     static_cast<unsigned>(rows.size())));
  std::vector<std::vector<ScanCell>> results(rows.size());
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < rows.size(); i += workers) results[i] = row(rows[i]);
    }));
  }
  for (auto& j : jobs) j.get();

  std::vector<ScanCell> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::optional<Period> detect_period(const std::vector<Letter>& x) {
  std::uint64_t n = x.size();
  for (std::uint64_t t = 1; 2 * t <= n; ++t) {
    // Largest index i with x[i] != x[i+t]; the preperiod must exceed it.
    std::uint64_t n0 = 0;
    for (std::uint64_t i = n - t; i-- > 0;) {
      if (x[i] != x[i + t]) {
        n0 = i + 1;
        break;
      }
    }
    if (n0 + 2 * t <= n && 4 * n0 <= n) return Period{n0, t};
  }
  return std::nullopt;
}

std::optional<Period> detect_period(const Seq& s, std::uint64_t length) {
  return detect_period(s.prefix(length));
}

void write_prefix(std::ostream& out, const Seq& s, std::uint64_t count, DumpFormat format) {
  auto terms = s.prefix(count);
  std::uint64_t first = s.first_index();
  switch (format) {
    case DumpFormat::Text:
      for (Letter v : terms) out << format_letter(v);
      out << '\n';
      break;
    case DumpFormat::Csv:
      out << "n,value\n";
      for (std::size_t i = 0; i < terms.size(); ++i) out << first + i << ',' << terms[i] << '\n';
      break;
    case DumpFormat::JsonLines:
      for (std::size_t i = 0; i < terms.size(); ++i) {
        out << "{\"index\":" << first + i << ",\"value\":" << terms[i] << "}\n";
      }
      break;
  }
}

}  // namespace selfsim
