#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "selfsim/error.hpp"

namespace selfsim {

/// Raw value of an element of Z_k, always in [0, k).
using Letter = std::uint32_t;

class GroupElem;

/// The additive group Z_k of integers modulo k. The order is a runtime
/// value; k = 1 (the trivial group) is allowed.
class CyclicGroup {
 public:
  explicit CyclicGroup(std::uint32_t order);

  std::uint32_t order() const noexcept { return order_; }

  Letter add(Letter a, Letter b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Letter>(s >= order_ ? s - order_ : s);
  }
  Letter sub(Letter a, Letter b) const noexcept { return add(a, neg(b)); }
  Letter neg(Letter a) const noexcept { return a == 0 ? 0 : order_ - a; }

  /// j·c = c + c + ... + c (j times).
  Letter scalar(std::uint64_t j, Letter c) const noexcept {
    return static_cast<Letter>((j % order_) * c % order_);
  }

  /// Canonical representative of an arbitrary integer.
  Letter reduce(std::int64_t v) const noexcept;

  bool contains(Letter a) const noexcept { return a < order_; }
  void check(Letter a) const;

  GroupElem elem(std::int64_t v) const;

  friend bool operator==(const CyclicGroup&, const CyclicGroup&) = default;

 private:
  std::uint32_t order_;
};

/// Throws GroupMismatch unless both groups have the same order.
void require_same_group(const CyclicGroup& a, const CyclicGroup& b, const char* context);

/// An element of a specific cyclic group. Arithmetic across groups throws.
class GroupElem {
 public:
  GroupElem(CyclicGroup group, Letter value);

  Letter value() const noexcept { return value_; }
  const CyclicGroup& group() const noexcept { return group_; }

  GroupElem operator+(const GroupElem& other) const;
  GroupElem operator-(const GroupElem& other) const;
  GroupElem operator-() const { return GroupElem(group_, group_.neg(value_)); }

  friend bool operator==(const GroupElem&, const GroupElem&) = default;

 private:
  CyclicGroup group_;
  Letter value_;
};

/// m / gcd(n, m); the least x with m | n·x.
std::uint64_t xi(std::uint64_t n, std::uint64_t m);

/// j·c in the group of c.
GroupElem scalar_mul(std::uint64_t j, const GroupElem& c);

/// Whether a ↦ a·c is a homomorphism Z_n → Z_m, i.e. whether xi(n, m) divides c.
/// `c` must belong to Z_m.
bool ghom_is_homomorphism(std::uint64_t n, std::uint64_t m, const GroupElem& c);

/// Textual form of a letter: a decimal digit, or `{v}` when the value has
/// more than one digit.
std::string format_letter(Letter v);

/// A finite word over Z_k.
class Word {
 public:
  explicit Word(CyclicGroup group, std::vector<Letter> letters = {});

  const CyclicGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Pointwise shift by a constant.
  Word plus(Letter c) const;
  Word concat(const Word& other) const;
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  CyclicGroup group_;
  std::vector<Letter> letters_;
};

/// Parses a word of single-digit (or `{v}`) letters. Whitespace is ignored.
Word parse_word(std::string_view text, const CyclicGroup& group);

/// Letterwise w ⊙ c: a word over Z_n mapped into the group of c.
Word scale(const Word& w, const GroupElem& c);

/// A bijection on Z_k, stored as the full image table.
class Perm {
 public:
  static Perm identity(const CyclicGroup& group);
  static Perm rotation(const CyclicGroup& group, Letter d);
  static Perm from_table(const CyclicGroup& group, std::vector<Letter> table);

  Letter operator()(Letter a) const { return table_[a]; }

  /// this ∘ inner: apply `inner` first.
  Perm compose(const Perm& inner) const;
  Perm inverse() const;
  Perm pow(std::uint64_t k) const;

  /// d when this is the rotation a ↦ a + d.
  std::optional<Letter> rotation_amount() const;
  bool is_identity() const;
  bool commutes_with(const Perm& other) const;
  /// Equality restricted to the given letters.
  bool agrees_on(const Perm& other, std::span<const Letter> letters) const;

  const CyclicGroup& group() const noexcept { return group_; }
  std::span<const Letter> table() const noexcept { return table_; }

  /// `?` for the identity, `r<d>` for rotations, `[p:v0,...]` otherwise.
  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  Perm(CyclicGroup group, std::vector<Letter> table);

  CyclicGroup group_;
  std::vector<Letter> table_;
};

}  // namespace selfsim
