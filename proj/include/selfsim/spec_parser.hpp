#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "selfsim/additive.hpp"
#include "selfsim/error.hpp"
#include "selfsim/group.hpp"
#include "selfsim/pattern.hpp"
#include "selfsim/seq.hpp"

namespace selfsim {

/// Malformed sequence spec. `offset` is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected, const std::string& message)
      : Error("at offset " + std::to_string(offset) + ": " + message + " (expected " + expected + ")"),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

struct SeqSpec;

struct NuBase {
  std::uint64_t prime;
  std::uint32_t alphabet;
  friend bool operator==(const NuBase&, const NuBase&) = default;
};

struct ThueMorseBase {
  friend bool operator==(const ThueMorseBase&, const ThueMorseBase&) = default;
};

using SpecBase = std::variant<Pattern, Word, PrimeGenerator, NuBase, ThueMorseBase>;

struct SpecOp {
  enum class Kind { Subseq, Plus, Diff, Mod, Scale, Add };
  Kind kind;
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::shared_ptr<const SeqSpec> operand;

  friend bool operator==(const SpecOp& l, const SpecOp& r);
};

/// Parsed form of `base {"|" op}`.
struct SeqSpec {
  SpecBase base;
  std::vector<SpecOp> ops;

  friend bool operator==(const SeqSpec&, const SeqSpec&) = default;
};

/// Bases: `toeplitz:P`, `keane:u`, `pgs:{p:v,...}`, `pgs:modP{1:v,...;p:v}`,
/// `nu:p`, `tm`; each but `tm` takes an optional `@k` alphabet override, e.g.
/// `toeplitz@6:0r32r34r3`. Ops: `subseq(a,b)`, `plus(c)`, `diff`, `mod(k)`,
/// `scale(c,m)`, `add(spec)`.
SeqSpec parse_spec(std::string_view text, std::uint32_t default_alphabet = 2);

/// Canonical text; always carries the alphabet. parse_spec inverts it.
std::string print_spec(const SeqSpec& spec);

Seq build_seq(const SeqSpec& spec);

}  // namespace selfsim
