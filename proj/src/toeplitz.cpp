#include "selfsim/toeplitz.hpp"

#include <memory>

namespace selfsim {

namespace {

constexpr std::size_t kCacheTerms = 4096;
constexpr std::uint64_t kBulkLimit = std::uint64_t{1} << 24;

void require_productive(const LazyPattern& p) {
  if (!p.is_productive()) {
    throw DomainError("non-productive pattern: the first symbol is a gap (" + p.to_string(64) + ")");
  }
}

Letter evaluate(const LazyPattern& p, Length n, const std::vector<Letter>* cache) {
  const Length r = p.length();
  const Length q = p.gap_count();
  std::vector<Perm> chain;
  Letter v = 0;
  for (;;) {
    if (cache && n <= cache->size()) {
      v = (*cache)[static_cast<std::size_t>(n - 1)];
      break;
    }
    Length t = (n - 1) / r;
    Length s = (n - 1) % r + 1;
    Symbol sym = p.symbol(s);
    if (const auto* f = std::get_if<Perm>(&sym)) {
      chain.push_back(*f);
      n = q * t + p.gap_rank(s);
    } else {
      v = std::get<Letter>(sym);
      break;
    }
  }
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) v = (*it)(v);
  return v;
}

std::vector<Letter> bottom_up(const LazyPattern& p, std::size_t count) {
  const Length r = p.length();
  const Length q = p.gap_count();
  std::vector<Letter> x(count);
  for (std::size_t n = 1; n <= count; ++n) {
    Length t = (n - 1) / r;
    Length s = (n - 1) % r + 1;
    Symbol sym = p.symbol(s);
    if (const auto* f = std::get_if<Perm>(&sym)) {
      x[n - 1] = (*f)(x[static_cast<std::size_t>(q * t + p.gap_rank(s) - 1)]);
    } else {
      x[n - 1] = std::get<Letter>(sym);
    }
  }
  return x;
}

}  // namespace

Letter toeplitz_at(const LazyPattern& p, Length n) {
  require_productive(p);
  if (n == 0) throw DomainError("Toeplitz words are indexed from 1");
  return evaluate(p, n, nullptr);
}

std::vector<Letter> toeplitz_prefix(const LazyPattern& p, std::size_t count) {
  require_productive(p);
  return bottom_up(p, count);
}

Seq toeplitz_word(const LazyPattern& p) {
  require_productive(p);
  auto cache = std::make_shared<const std::vector<Letter>>(bottom_up(p, kCacheTerms));
  std::string desc = "toeplitz@" + std::to_string(p.group().order()) + ":" + p.to_string(256);
  return Seq(
      p.group(), IndexBase::One, std::move(desc),
      [p, cache](std::uint64_t n) { return evaluate(p, n, cache.get()); },
      [p, cache](std::uint64_t first, std::uint64_t count) {
        std::uint64_t last = first + count - 1;
        if (count == 0) return std::vector<Letter>{};
        if (last <= cache->size()) {
          return std::vector<Letter>(cache->begin() + static_cast<std::ptrdiff_t>(first - 1),
                                     cache->begin() + static_cast<std::ptrdiff_t>(last));
        }
        if (last <= kBulkLimit) {
          auto all = bottom_up(p, static_cast<std::size_t>(last));
          return std::vector<Letter>(all.begin() + static_cast<std::ptrdiff_t>(first - 1), all.end());
        }
        std::vector<Letter> out;
        out.reserve(count);
        for (std::uint64_t n = first; n <= last; ++n) out.push_back(evaluate(p, n, cache.get()));
        return out;
      });
}

EquivalenceVerdict pattern_equiv(const LazyPattern& p, const LazyPattern& q, std::uint64_t depth) {
  require_same_group(p.group(), q.group(), "pattern equivalence");
  auto x = toeplitz_prefix(p, depth);
  auto y = toeplitz_prefix(q, depth);
  for (std::uint64_t i = 0; i < depth; ++i) {
    if (x[i] != y[i]) return {i + 1, depth};
  }
  return {std::nullopt, depth};
}

UniformMorphism::UniformMorphism(std::vector<Word> images) : images_(std::move(images)) {
  if (images_.empty()) throw DomainError("a morphism needs at least one image");
  const CyclicGroup& g = images_.front().group();
  if (images_.size() != g.order()) {
    throw DomainError("a morphism on Z_" + std::to_string(g.order()) + " needs " +
                      std::to_string(g.order()) + " images");
  }
  for (const auto& w : images_) {
    require_same_group(g, w.group(), "morphism image");
    if (w.size() != images_.front().size() || w.empty()) {
      throw DomainError("morphism images must be nonempty and of equal length");
    }
  }
}

Word UniformMorphism::apply(const Word& w) const {
  require_same_group(group(), w.group(), "morphism application");
  std::vector<Letter> out;
  out.reserve(w.size() * width());
  for (Letter a : w) {
    const Word& img = images_[a];
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(group(), std::move(out));
}

Seq UniformMorphism::fixed_point(Letter start) const {
  group().check(start);
  if (images_[start][0] != start) {
    throw DomainError("h(" + std::to_string(start) + ") does not begin with " + std::to_string(start));
  }
  auto self = std::make_shared<const UniformMorphism>(*this);
  auto eval = [self, start](std::uint64_t n) {
    std::uint64_t w = self->width();
    if (w == 1) return start;
    std::vector<std::uint64_t> digits;
    for (std::uint64_t i = n - 1; i > 0; i /= w) digits.push_back(i % w);
    Letter x = start;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) x = self->images_[x][*it];
    return x;
  };
  return Seq(group(), IndexBase::One, "fixpoint(" + to_string() + ")", eval);
}

std::string UniformMorphism::to_string() const {
  std::string s;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (a) s += ',';
    s += format_letter(static_cast<Letter>(a)) + "->" + images_[a].to_string();
  }
  return s;
}

UniformMorphism pattern_to_morphism(const Pattern& p) {
  if (!p.is_productive() || !p.is_one_gap()) {
    throw DomainError("pattern_to_morphism needs a productive one-gap pattern");
  }
  std::vector<Word> images;
  for (Letter a = 0; a < p.group().order(); ++a) {
    std::vector<Symbol> filler(p.gap_count(), Symbol{a});
    images.emplace_back(p.group(), fill(p, filler).letters());
  }
  return UniformMorphism(std::move(images));
}

Pattern morphism_to_pattern(const UniformMorphism& h) {
  const CyclicGroup& g = h.group();
  const std::size_t w = h.width();
  std::optional<std::size_t> varying;
  for (std::size_t j = 0; j < w; ++j) {
    for (Letter a = 1; a < g.order(); ++a) {
      if (h.image(a)[j] != h.image(0)[j]) {
        if (varying && *varying != j) {
          throw DomainError("morphism images differ in more than one position");
        }
        varying = j;
      }
    }
  }
  // A single-letter alphabet never varies; its gap goes last.
  std::size_t j = varying.value_or(w - 1);
  if (j == 0) throw DomainError("morphism images must share their first letter");
  std::vector<Letter> table;
  for (Letter a = 0; a < g.order(); ++a) table.push_back(h.image(a)[j]);
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < w; ++i) {
    if (i == j) {
      try {
        out.emplace_back(Perm::from_table(g, table));
      } catch (const DomainError&) {
        throw DomainError("the varying position of the morphism is not a bijection");
      }
    } else {
      out.emplace_back(h.image(0)[i]);
    }
  }
  return Pattern(g, std::move(out));
}

}  // namespace selfsim
