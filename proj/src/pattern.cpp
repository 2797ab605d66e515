#include "selfsim/pattern.hpp"

#include <cctype>

namespace selfsim {

std::string symbol_to_string(const Symbol& s) {
  if (const auto* f = std::get_if<Perm>(&s)) return f->to_string();
  return format_letter(std::get<Letter>(s));
}

Pattern::Pattern(CyclicGroup group, std::vector<Symbol> symbols)
    : group_(group), symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw DomainError("a pattern must be nonempty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (const auto* f = std::get_if<Perm>(&symbols_[i])) {
      require_same_group(group_, f->group(), "pattern gap");
      gap_positions_.push_back(i + 1);
    } else {
      group_.check(std::get<Letter>(symbols_[i]));
    }
  }
}

Pattern Pattern::identity(const CyclicGroup& group) {
  return Pattern(group, {Perm::identity(group)});
}

Pattern Pattern::from_word(const Word& w) {
  return Pattern(w.group(), std::vector<Symbol>(w.begin(), w.end()));
}

std::vector<Letter> Pattern::letters() const {
  std::vector<Letter> out;
  for (const auto& s : symbols_) {
    if (!is_gap(s)) out.push_back(std::get<Letter>(s));
  }
  return out;
}

std::string Pattern::to_string() const {
  std::string out;
  for (const auto& s : symbols_) out += symbol_to_string(s);
  return out;
}

namespace {

[[noreturn]] void bad_pattern(std::string_view text, std::size_t pos, const std::string& what) {
  throw DomainError("pattern '" + std::string(text) + "' at offset " + std::to_string(pos) + ": " +
                    what);
}

std::uint64_t read_braced(std::string_view text, std::size_t& i) {
  auto close = text.find('}', i);
  if (close == std::string_view::npos || close == i + 1) bad_pattern(text, i, "unterminated '{'");
  std::uint64_t v = 0;
  for (std::size_t j = i + 1; j < close; ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) bad_pattern(text, j, "expected digit");
    v = v * 10 + static_cast<std::uint64_t>(text[j] - '0');
    if (v > UINT32_MAX) bad_pattern(text, j, "value too large");
  }
  i = close;
  return v;
}

}  // namespace

Pattern parse_pattern(std::string_view text, const CyclicGroup& group) {
  std::vector<Symbol> out;
  const std::uint32_t k = group.order();
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Letter v = static_cast<Letter>(ch - '0');
      if (v >= k) bad_pattern(text, i, "letter " + std::to_string(v) + " not in Z_" + std::to_string(k));
      out.emplace_back(v);
    } else if (ch == '{') {
      std::size_t at = i;
      auto v = read_braced(text, i);
      if (v >= k) bad_pattern(text, at, "letter " + std::to_string(v) + " not in Z_" + std::to_string(k));
      out.emplace_back(static_cast<Letter>(v));
    } else if (ch == '?') {
      out.emplace_back(Perm::identity(group));
    } else if (ch == 'r') {
      std::size_t at = i;
      std::uint64_t d = 0;
      if (i + 1 < text.size() && text[i + 1] == '{') {
        ++i;
        d = read_braced(text, i);
      } else {
        std::size_t j = i + 1;
        if (j >= text.size() || !std::isdigit(static_cast<unsigned char>(text[j]))) {
          bad_pattern(text, j, "expected rotation amount after 'r'");
        }
        d = static_cast<std::uint64_t>(text[j] - '0');
        while (j + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[j + 1])) &&
               d * 10 + static_cast<std::uint64_t>(text[j + 1] - '0') < k) {
          ++j;
          d = d * 10 + static_cast<std::uint64_t>(text[j] - '0');
        }
        i = j;
      }
      if (d >= k) bad_pattern(text, at, "rotation " + std::to_string(d) + " not in Z_" + std::to_string(k));
      out.emplace_back(Perm::rotation(group, static_cast<Letter>(d)));
    } else if (ch == '[') {
      auto close = text.find(']', i);
      if (close == std::string_view::npos || text.substr(i, 3) != "[p:") {
        bad_pattern(text, i, "expected '[p:v0,...,vk-1]'");
      }
      std::vector<Letter> table;
      std::string_view body = text.substr(i + 3, close - i - 3);
      std::size_t start = 0;
      while (start <= body.size()) {
        auto comma = body.find(',', start);
        auto item = body.substr(start, comma == std::string_view::npos ? body.size() - start : comma - start);
        if (item.empty()) bad_pattern(text, i, "empty permutation entry");
        std::uint64_t v = 0;
        for (char c : item) {
          if (!std::isdigit(static_cast<unsigned char>(c))) bad_pattern(text, i, "expected digit in permutation");
          v = v * 10 + static_cast<std::uint64_t>(c - '0');
          if (v > UINT32_MAX) bad_pattern(text, i, "permutation value too large");
        }
        table.push_back(static_cast<Letter>(v));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      try {
        out.emplace_back(Perm::from_table(group, std::move(table)));
      } catch (const DomainError& e) {
        bad_pattern(text, i, e.what());
      }
      i = close;
    } else {
      bad_pattern(text, i, std::string("unexpected character '") + ch + "'");
    }
  }
  if (out.empty()) bad_pattern(text, 0, "empty pattern");
  return Pattern(group, std::move(out));
}

Pattern fill(const Pattern& u, std::span<const Symbol> v) {
  if (u.gap_count() != v.size()) {
    throw DomainError("fill: " + std::to_string(u.gap_count()) + " gaps but " +
                      std::to_string(v.size()) + " fillers");
  }
  std::vector<Symbol> out;
  out.reserve(u.size());
  std::size_t next = 0;
  for (const auto& s : u) {
    const auto* f = std::get_if<Perm>(&s);
    if (!f) {
      out.push_back(s);
      continue;
    }
    const Symbol& x = v[next++];
    if (const auto* g = std::get_if<Perm>(&x)) {
      require_same_group(f->group(), g->group(), "fill");
      out.emplace_back(f->compose(*g));
    } else {
      out.emplace_back((*f)(std::get<Letter>(x)));
    }
  }
  return Pattern(u.group(), std::move(out));
}

Pattern repeat(const Pattern& p, std::size_t times) {
  if (times == 0) throw DomainError("repeat count must be positive");
  if (p.size() > kMaxPatternLength / times) throw DomainError("pattern too long to materialize");
  std::vector<Symbol> out;
  out.reserve(p.size() * times);
  for (std::size_t t = 0; t < times; ++t) out.insert(out.end(), p.begin(), p.end());
  return Pattern(p.group(), std::move(out));
}

Pattern compose(const Pattern& p, const Pattern& q) {
  require_same_group(p.group(), q.group(), "pattern composition");
  if (p.gap_count() == 0) return p;
  std::uint64_t d1 = xi(p.gap_count(), q.size());
  std::uint64_t d2 = xi(q.size(), p.gap_count());
  Pattern filler = repeat(q, d2);
  return fill(repeat(p, d1), filler.symbols());
}

Pattern power(const Pattern& p, std::uint64_t k) {
  Pattern out = Pattern::identity(p.group());
  for (std::uint64_t i = 0; i < k; ++i) out = compose(p, out);
  return out;
}

}  // namespace selfsim
