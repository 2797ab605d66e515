#pragma once

#include <cstdint>
#include <optional>

#include "selfsim/group.hpp"
#include "selfsim/pattern.hpp"
#include "selfsim/seq.hpp"

namespace selfsim {

/// u×v: |v| copies of u, the i-th shifted by v(i).
Word keane_product(const Word& u, const Word& v);

/// u^(0) = 0, u^(n+1) = u × u^(n).
Word keane_power(const Word& u, std::uint64_t n);

/// The Keane word K(u), indexed from 0: the sum of u(d) over the base-|u|
/// digits d of n. Requires |u| >= 2 and u(0) = 0.
Seq keane_word(const Word& u);

/// x(i+1) - x(i) for i < |x| - 1. Throws on the empty word.
Word diff(const Word& x);

/// First differences as a 1-based sequence: s(n) - s(n-1) for a 0-based s,
/// s(n+1) - s(n) for a 1-based s.
Seq diff(const Seq& s);

/// diff(u) followed by the rotation gap r_d, d = -u(last). Requires u(0) = 0.
Pattern delta_t(const Word& u);

/// Inverse of delta_t on patterns a_1 ... a_{n-1} r_d with d = -(a_1 + ... + a_{n-1}).
Word sum_t(const Pattern& p);

/// Parity of the number of 1 bits of n.
Letter thue_morse(std::uint64_t n);

/// x + y when the binary supports are disjoint.
std::optional<std::uint64_t> carry_free_add(std::uint64_t x, std::uint64_t y);

/// y > 0 with m(y) = 0 and m(x·y) = 1, for x not a power of two.
std::uint64_t tm_witness(std::uint64_t x);

/// Closed form of arithmetic self-similarity for Thue–Morse (0-based):
/// b is a power of two and a < b.
bool as_morse(std::uint64_t a, std::uint64_t b);

}  // namespace selfsim
