#include "selfsim/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace selfsim {

CyclicGroup::CyclicGroup(std::uint32_t order) : order_(order) {
  if (order == 0) throw DomainError("cyclic group order must be at least 1");
}

Letter CyclicGroup::reduce(std::int64_t v) const noexcept {
  std::int64_t k = order_;
  std::int64_t r = v % k;
  return static_cast<Letter>(r < 0 ? r + k : r);
}

void CyclicGroup::check(Letter a) const {
  if (a >= order_) {
    throw DomainError("letter " + std::to_string(a) + " is not in Z_" + std::to_string(order_));
  }
}

GroupElem CyclicGroup::elem(std::int64_t v) const { return GroupElem(*this, reduce(v)); }

void require_same_group(const CyclicGroup& a, const CyclicGroup& b, const char* context) {
  if (a != b) {
    throw GroupMismatch(std::string(context) + ": Z_" + std::to_string(a.order()) + " vs Z_" +
                        std::to_string(b.order()));
  }
}

GroupElem::GroupElem(CyclicGroup group, Letter value) : group_(group), value_(value) {
  group_.check(value);
}

GroupElem GroupElem::operator+(const GroupElem& other) const {
  require_same_group(group_, other.group_, "element addition");
  return GroupElem(group_, group_.add(value_, other.value_));
}

GroupElem GroupElem::operator-(const GroupElem& other) const {
  require_same_group(group_, other.group_, "element subtraction");
  return GroupElem(group_, group_.sub(value_, other.value_));
}

std::uint64_t xi(std::uint64_t n, std::uint64_t m) {
  if (n == 0 || m == 0) throw DomainError("xi requires positive arguments");
  return m / std::gcd(n, m);
}

GroupElem scalar_mul(std::uint64_t j, const GroupElem& c) {
  return GroupElem(c.group(), c.group().scalar(j, c.value()));
}

bool ghom_is_homomorphism(std::uint64_t n, std::uint64_t m, const GroupElem& c) {
  if (c.group().order() != m) {
    throw GroupMismatch("ghom: c must belong to Z_" + std::to_string(m));
  }
  return c.value() % xi(n, m) == 0;
}

std::string format_letter(Letter v) {
  if (v < 10) return std::string(1, static_cast<char>('0' + v));
  return "{" + std::to_string(v) + "}";
}

Word::Word(CyclicGroup group, std::vector<Letter> letters)
    : group_(group), letters_(std::move(letters)) {
  for (Letter a : letters_) group_.check(a);
}

Word Word::plus(Letter c) const {
  group_.check(c);
  std::vector<Letter> out(letters_.size());
  std::transform(letters_.begin(), letters_.end(), out.begin(),
                 [&](Letter a) { return group_.add(a, c); });
  return Word(group_, std::move(out));
}

Word Word::concat(const Word& other) const {
  require_same_group(group_, other.group_, "word concatenation");
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(group_, std::move(out));
}

std::string Word::to_string() const {
  std::string s;
  for (Letter a : letters_) s += format_letter(a);
  return s;
}

Word parse_word(std::string_view text, const CyclicGroup& group) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      out.push_back(static_cast<Letter>(ch - '0'));
    } else if (ch == '{') {
      auto close = text.find('}', i);
      if (close == std::string_view::npos || close == i + 1) {
        throw DomainError("unterminated letter in word '" + std::string(text) + "'");
      }
      out.push_back(static_cast<Letter>(std::stoul(std::string(text.substr(i + 1, close - i - 1)))));
      i = close;
    } else {
      throw DomainError("unexpected character '" + std::string(1, ch) + "' in word");
    }
  }
  return Word(group, std::move(out));
}

Word scale(const Word& w, const GroupElem& c) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter a : w) out.push_back(c.group().scalar(a, c.value()));
  return Word(c.group(), std::move(out));
}

Perm::Perm(CyclicGroup group, std::vector<Letter> table)
    : group_(group), table_(std::move(table)) {}

Perm Perm::identity(const CyclicGroup& group) {
  std::vector<Letter> t(group.order());
  std::iota(t.begin(), t.end(), Letter{0});
  return Perm(group, std::move(t));
}

Perm Perm::rotation(const CyclicGroup& group, Letter d) {
  group.check(d);
  std::vector<Letter> t(group.order());
  for (Letter a = 0; a < group.order(); ++a) t[a] = group.add(a, d);
  return Perm(group, std::move(t));
}

Perm Perm::from_table(const CyclicGroup& group, std::vector<Letter> table) {
  if (table.size() != group.order()) {
    throw DomainError("permutation table has " + std::to_string(table.size()) +
                      " entries, expected " + std::to_string(group.order()));
  }
  std::vector<bool> seen(group.order(), false);
  for (Letter v : table) {
    group.check(v);
    if (seen[v]) throw DomainError("permutation table is not a bijection");
    seen[v] = true;
  }
  return Perm(group, std::move(table));
}

Perm Perm::compose(const Perm& inner) const {
  require_same_group(group_, inner.group_, "permutation composition");
  std::vector<Letter> t(table_.size());
  for (std::size_t a = 0; a < t.size(); ++a) t[a] = table_[inner.table_[a]];
  return Perm(group_, std::move(t));
}

Perm Perm::inverse() const {
  std::vector<Letter> t(table_.size());
  for (std::size_t a = 0; a < t.size(); ++a) t[table_[a]] = static_cast<Letter>(a);
  return Perm(group_, std::move(t));
}

Perm Perm::pow(std::uint64_t k) const {
  Perm result = identity(group_);
  Perm base = *this;
  while (k > 0) {
    if (k & 1) result = result.compose(base);
    base = base.compose(base);
    k >>= 1;
  }
  return result;
}

std::optional<Letter> Perm::rotation_amount() const {
  Letter d = table_[0];
  for (Letter a = 0; a < table_.size(); ++a) {
    if (table_[a] != group_.add(a, d)) return std::nullopt;
  }
  return d;
}

bool Perm::is_identity() const {
  for (Letter a = 0; a < table_.size(); ++a) {
    if (table_[a] != a) return false;
  }
  return true;
}

bool Perm::commutes_with(const Perm& other) const {
  return compose(other) == other.compose(*this);
}

bool Perm::agrees_on(const Perm& other, std::span<const Letter> letters) const {
  require_same_group(group_, other.group_, "permutation comparison");
  return std::all_of(letters.begin(), letters.end(),
                     [&](Letter a) { return table_[a] == other.table_[a]; });
}

std::string Perm::to_string() const {
  if (auto d = rotation_amount()) {
    if (*d == 0) return "?";
    if (group_.order() <= 10) return "r" + std::to_string(*d);
    return "r{" + std::to_string(*d) + "}";
  }
  std::string s = "[p:";
  for (std::size_t a = 0; a < table_.size(); ++a) {
    if (a) s += ',';
    s += std::to_string(table_[a]);
  }
  return s + "]";
}

}  // namespace selfsim
