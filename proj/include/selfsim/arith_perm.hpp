#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "selfsim/lazy_pattern.hpp"
#include "selfsim/pattern.hpp"

namespace selfsim {

/// Pattern whose Toeplitz word is T(P) read along a, a+b, a+2b, ... when
/// gcd(b, |P|) = 1. Requires one gap, placed last, and 1 <= a <= b.
/// The result has length |P|^m (m the order of |P| modulo b) and its single
/// gap f^m sits at a·c + 1 with c = (|P|^m - 1)/b.
LazyPattern arith_perm_coprime(const LazyPattern& p, std::uint64_t a, std::uint64_t b);

struct GapToEnd {
  Pattern pattern;
  std::uint64_t a;
  std::uint64_t b;
};

/// For Q = u·f·v: P = rev(u)·rev(v)·f with arith_perm_coprime(P, |u|, |Q|-1) = Q.
GapToEnd gap_to_end(const Pattern& q);

/// B = P(a) P(a+b) ... P(a+(c-1)b) with c = |P|/b, positions read modulo |P|.
LazyPattern dividing_block(const LazyPattern& p, std::uint64_t a, std::uint64_t b);

/// Pattern for T(P) read along a, a+b, ... when b divides |P|. Requires one
/// gap at an index j > a. When the progression meets the gap the result is
/// (B∘u)·(?..f..?)·(B∘v) with |P|/b gaps; otherwise it is B.
LazyPattern arith_perm_dividing(const LazyPattern& p, std::uint64_t a, std::uint64_t b);

/// Least m >= 1 whose power Q^(m) has its gap beyond index a.
std::pair<LazyPattern, std::uint64_t> raise_until_gap_past(const LazyPattern& q, std::uint64_t a);

struct GapToEndStep {
  Pattern before;
  Pattern after;
  std::uint64_t a_in, b_in, a_out, b_out;
};

struct SplitStep {
  std::uint64_t a, b;
  std::uint64_t a1, b1;
  std::uint64_t a2, b2;
};

struct CoprimeStep {
  std::uint64_t a, b;
  std::uint64_t order;
  Length c;
  Length gap_index;
  Length length;
};

struct RaiseStep {
  std::uint64_t exponent;
  Length gap_index;
  Length length;
};

struct DividingStep {
  std::uint64_t a, b;
  Length c;
  /// Slot of the gap inside B, when the progression meets it.
  std::optional<Length> gap_slot;
  std::string block;
};

using TraceStep = std::variant<GapToEndStep, SplitStep, CoprimeStep, RaiseStep, DividingStep>;

std::string describe(const TraceStep& step);

struct SubseqTrace {
  Pattern input;
  std::uint64_t a;
  std::uint64_t b;
  std::vector<TraceStep> steps;

  std::string to_string() const;
};

struct SubseqResult {
  LazyPattern pattern;
  SubseqTrace trace;
};

/// A pattern generating T(P) read along a, a+b, a+2b, ... for any productive
/// one-gap P. The result is checked against the direct subsequence on its
/// first `verify_depth` terms (0 skips the check); a mismatch throws
/// InternalError.
SubseqResult subseq_pattern(const Pattern& p, std::uint64_t a, std::uint64_t b,
                            std::uint64_t verify_depth = 1000);

/// Re-applies the recorded steps to the trace's input.
LazyPattern replay_trace(const SubseqTrace& trace);

/// g(u)·f·g(v) for P = u·f·v and g commuting with f.
Pattern conjugate_by_commuting_gap(const Pattern& p, const Perm& g);

}  // namespace selfsim
