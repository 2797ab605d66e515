#include "selfsim/spec_parser.hpp"

#include <cctype>

#include "selfsim/keane.hpp"
#include "selfsim/toeplitz.hpp"

namespace selfsim {

bool operator==(const SpecOp& l, const SpecOp& r) {
  if (l.kind != r.kind || l.x != r.x || l.y != r.y) return false;
  if (!l.operand || !r.operand) return !l.operand && !r.operand;
  return *l.operand == *r.operand;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::uint32_t alphabet) : text_(text), alphabet_(alphabet) {}

  SeqSpec spec(bool nested) {
    SeqSpec out{base(nested), {}};
    skip_ws();
    while (peek() == '|') {
      ++pos_;
      out.ops.push_back(op());
      skip_ws();
    }
    return out;
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("'|' or end of input", "trailing characters");
  }

  std::size_t pos() const { return pos_; }

 private:
  [[noreturn]] void fail(const std::string& expected, const std::string& message) const {
    throw ParseError(pos_, expected, message);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("'") + c + "'", "unexpected input");
    ++pos_;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t integer() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("integer", "missing number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (UINT64_MAX - d) / 10) fail("smaller integer", "number too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  std::uint32_t alphabet_value(std::uint64_t k) const {
    if (k == 0 || k > UINT32_MAX) throw ParseError(pos_, "alphabet size >= 1", "bad alphabet size");
    return static_cast<std::uint32_t>(k);
  }

  /// Raw text up to the next top-level '|' (or ')' when nested).
  std::string_view body(bool nested) {
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '|' && !(nested && text_[pos_] == ')')) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  SpecBase base(bool nested) {
    std::size_t start = pos_;
    std::string name = ident();
    if (name.empty()) fail("toeplitz, keane, pgs, nu or tm", "missing sequence kind");
    if (name == "tm") return ThueMorseBase{};
    std::uint32_t k = alphabet_;
    skip_ws();
    if (peek() == '@') {
      ++pos_;
      k = alphabet_value(integer());
    }
    expect(':');
    skip_ws();
    CyclicGroup group(k);
    std::size_t at = pos_;
    if (name == "toeplitz") {
      auto text = body(nested);
      try {
        return parse_pattern(text, group);
      } catch (const DomainError& e) {
        throw ParseError(at, "pattern", e.what());
      }
    }
    if (name == "keane") {
      auto text = body(nested);
      try {
        Word u = parse_word(text, group);
        if (u.empty()) throw DomainError("empty block");
        return u;
      } catch (const DomainError& e) {
        throw ParseError(at, "block of letters", e.what());
      }
    }
    if (name == "nu") {
      std::uint64_t p = integer();
      return NuBase{p, k};
    }
    if (name == "pgs") return generator(group);
    pos_ = start;
    fail("toeplitz, keane, pgs, nu or tm", "unknown sequence kind '" + name + "'");
  }

  Letter value(const CyclicGroup& group) {
    std::size_t at = pos_;
    std::uint64_t v = integer();
    if (v >= group.order()) {
      throw ParseError(at, "letter below " + std::to_string(group.order()),
                       "value " + std::to_string(v) + " not in Z_" + std::to_string(group.order()));
    }
    return static_cast<Letter>(v);
  }

  PrimeGenerator generator(const CyclicGroup& group) {
    std::size_t at = pos_;
    try {
      if (peek() == '{') {
        ++pos_;
        std::map<std::uint64_t, Letter> table;
        skip_ws();
        if (peek() != '}') {
          for (;;) {
            std::uint64_t p = integer();
            expect(':');
            table[p] = value(group);
            skip_ws();
            if (peek() != ',') break;
            ++pos_;
          }
        }
        expect('}');
        return PrimeGenerator::finite_table(group, std::move(table));
      }
      if (ident() != "mod") fail("'{' or 'mod'", "bad generator");
      std::uint64_t p = integer();
      expect('{');
      std::vector<Letter> residues;
      for (;;) {
        std::size_t item = pos_;
        std::uint64_t i = integer();
        if (i != residues.size() + 1) {
          throw ParseError(item, "residue " + std::to_string(residues.size() + 1), "residues must be listed in order");
        }
        expect(':');
        residues.push_back(value(group));
        skip_ws();
        if (peek() != ',') break;
        ++pos_;
      }
      expect(';');
      skip_ws();
      if (peek() != 'p') fail("'p:'", "missing value at the modulus");
      ++pos_;
      expect(':');
      Letter at_p = value(group);
      expect('}');
      return PrimeGenerator::residue_rule(group, p, std::move(residues), at_p);
    } catch (const DomainError& e) {
      throw ParseError(at, "prime generator", e.what());
    }
  }

  SpecOp op() {
    std::size_t start = pos_;
    std::string name = ident();
    if (name == "diff") return {SpecOp::Kind::Diff, 0, 0, nullptr};
    if (name == "subseq" || name == "scale") {
      expect('(');
      std::uint64_t x = integer();
      expect(',');
      std::uint64_t y = integer();
      expect(')');
      return {name == "subseq" ? SpecOp::Kind::Subseq : SpecOp::Kind::Scale, x, y, nullptr};
    }
    if (name == "plus" || name == "mod") {
      expect('(');
      std::uint64_t x = integer();
      expect(')');
      return {name == "plus" ? SpecOp::Kind::Plus : SpecOp::Kind::Mod, x, 0, nullptr};
    }
    if (name == "add") {
      expect('(');
      auto inner = std::make_shared<const SeqSpec>(spec(true));
      expect(')');
      return {SpecOp::Kind::Add, 0, 0, inner};
    }
    pos_ = start;
    fail("subseq, plus, diff, mod, scale or add", "unknown operator '" + name + "'");
  }

  std::string_view text_;
  std::uint32_t alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

SeqSpec parse_spec(std::string_view text, std::uint32_t default_alphabet) {
  Parser parser(text, default_alphabet);
  SeqSpec out = parser.spec(false);
  parser.finish();
  return out;
}

std::string print_spec(const SeqSpec& spec) {
  struct {
    std::string operator()(const Pattern& p) const {
      return "toeplitz@" + std::to_string(p.group().order()) + ":" + p.to_string();
    }
    std::string operator()(const Word& u) const {
      return "keane@" + std::to_string(u.group().order()) + ":" + u.to_string();
    }
    std::string operator()(const PrimeGenerator& g) const {
      return "pgs@" + std::to_string(g.group().order()) + ":" + g.to_string();
    }
    std::string operator()(const NuBase& n) const {
      return "nu@" + std::to_string(n.alphabet) + ":" + std::to_string(n.prime);
    }
    std::string operator()(const ThueMorseBase&) const { return "tm"; }
  } base;
  std::string out = std::visit(base, spec.base);
  for (const auto& op : spec.ops) {
    out += '|';
    switch (op.kind) {
      case SpecOp::Kind::Subseq:
        out += "subseq(" + std::to_string(op.x) + "," + std::to_string(op.y) + ")";
        break;
      case SpecOp::Kind::Plus: out += "plus(" + std::to_string(op.x) + ")"; break;
      case SpecOp::Kind::Diff: out += "diff"; break;
      case SpecOp::Kind::Mod: out += "mod(" + std::to_string(op.x) + ")"; break;
      case SpecOp::Kind::Scale:
        out += "scale(" + std::to_string(op.x) + "," + std::to_string(op.y) + ")";
        break;
      case SpecOp::Kind::Add: out += "add(" + print_spec(*op.operand) + ")"; break;
    }
  }
  return out;
}

Seq build_seq(const SeqSpec& spec) {
  struct {
    Seq operator()(const Pattern& p) const { return toeplitz_word(p); }
    Seq operator()(const Word& u) const { return keane_word(u); }
    Seq operator()(const PrimeGenerator& g) const { return pgs(g); }
    Seq operator()(const NuBase& n) const {
      CyclicGroup group(n.alphabet);
      return pgs(PrimeGenerator::finite_table(group, {{n.prime, group.reduce(1)}}));
    }
    Seq operator()(const ThueMorseBase&) const {
      return keane_word(Word(CyclicGroup(2), {0, 1}));
    }
  } base;
  Seq s = std::visit(base, spec.base);
  for (const auto& op : spec.ops) {
    switch (op.kind) {
      case SpecOp::Kind::Subseq: s = subseq(s, op.x, op.y); break;
      case SpecOp::Kind::Plus: {
        if (op.x >= s.group().order()) throw DomainError("plus value outside the alphabet");
        s = shift_const(s, GroupElem(s.group(), static_cast<Letter>(op.x)));
        break;
      }
      case SpecOp::Kind::Diff: s = diff(s); break;
      case SpecOp::Kind::Mod:
        if (op.x == 0 || op.x > UINT32_MAX) throw DomainError("bad modulus");
        s = reduce_mod(s, static_cast<std::uint32_t>(op.x));
        break;
      case SpecOp::Kind::Scale: {
        if (op.y == 0 || op.y > UINT32_MAX || op.x >= op.y) throw DomainError("scale needs c < m");
        s = scale(s, GroupElem(CyclicGroup(static_cast<std::uint32_t>(op.y)), static_cast<Letter>(op.x)));
        break;
      }
      case SpecOp::Kind::Add: s = add(s, build_seq(*op.operand)); break;
    }
  }
  return s;
}

}  // namespace selfsim
