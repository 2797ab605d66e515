#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "selfsim/additive.hpp"
#include "selfsim/arith_perm.hpp"
#include "selfsim/keane.hpp"
#include "selfsim/spec_parser.hpp"
#include "selfsim/toeplitz.hpp"
#include "selfsim/toeplitz_additive.hpp"

using namespace selfsim;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFalsified = 1;
constexpr int kUsage = 2;

json length_json(Length v) {
  if (v <= UINT64_MAX) return static_cast<std::uint64_t>(v);
  return to_decimal(v);
}

json step_json(const TraceStep& step) {
  json j;
  j["text"] = describe(step);
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GapToEndStep>) {
          j["kind"] = "gap-to-end";
          j["pattern"] = s.after.to_string();
          j["a"] = s.a_out;
          j["b"] = s.b_out;
        } else if constexpr (std::is_same_v<T, SplitStep>) {
          j["kind"] = "split";
          j.update({{"a1", s.a1}, {"b1", s.b1}, {"a2", s.a2}, {"b2", s.b2}});
        } else if constexpr (std::is_same_v<T, CoprimeStep>) {
          j["kind"] = "coprime";
          j.update({{"a", s.a}, {"b", s.b}, {"m", s.order}});
          j["c"] = length_json(s.c);
          j["gap_index"] = length_json(s.gap_index);
          j["length"] = length_json(s.length);
        } else if constexpr (std::is_same_v<T, RaiseStep>) {
          j["kind"] = "raise";
          j["exponent"] = s.exponent;
          j["gap_index"] = length_json(s.gap_index);
          j["length"] = length_json(s.length);
        } else {
          j["kind"] = "dividing";
          j.update({{"a", s.a}, {"b", s.b}});
          j["c"] = length_json(s.c);
          j["gap_slot"] = s.gap_slot ? length_json(*s.gap_slot) : json(nullptr);
          j["block"] = s.block;
        }
      },
      step);
  return j;
}

DumpFormat dump_format(const std::string& name) {
  if (name == "text") return DumpFormat::Text;
  if (name == "csv") return DumpFormat::Csv;
  if (name == "jsonl") return DumpFormat::JsonLines;
  throw DomainError("unknown format '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic self-similarity toolkit for sequences over Z_k"};
  app.require_subcommand(1);

  std::uint32_t alphabet = 2;
  auto alphabet_opt = [&](CLI::App* cmd) {
    cmd->add_option("--alphabet,-k", alphabet, "alphabet size k of Z_k")->check(CLI::PositiveNumber);
  };
  std::uint64_t depth = 4096;
  std::string spec, spec2, format = "text", pattern_a, pattern_b;
  std::uint64_t count = 32, a = 1, b = 1, amax = 8, bmax = 8, x = 0, power_k = 1;
  bool want_trace = false;
  std::uint64_t verify_depth = 1000;

  auto* gen = app.add_subcommand("gen", "print the first terms of a sequence");
  gen->add_option("--spec,-s", spec, "sequence spec")->required();
  gen->add_option("--n,-n", count, "number of terms");
  gen->add_option("--format,-f", format, "text, csv or jsonl");
  alphabet_opt(gen);

  auto* comp = app.add_subcommand("compose", "Toeplitz composition P∘Q");
  comp->add_option("P", pattern_a)->required();
  comp->add_option("Q", pattern_b)->required();
  alphabet_opt(comp);

  auto* pow = app.add_subcommand("power", "Toeplitz power P^(k)");
  pow->add_option("P", pattern_a)->required();
  pow->add_option("exponent", power_k)->required();
  alphabet_opt(pow);

  auto* classify = app.add_subcommand("classify", "decide additivity of a one-gap pattern (JSON)");
  classify->add_option("P", pattern_a)->required();
  alphabet_opt(classify);

  auto* sp = app.add_subcommand("subseq-pattern", "pattern generating T(P) read along a, a+b, ...");
  sp->add_option("P", pattern_a)->required();
  sp->add_option("a", a)->required()->check(CLI::PositiveNumber);
  sp->add_option("b", b)->required()->check(CLI::PositiveNumber);
  sp->add_flag("--trace", want_trace, "print the rewrite trace as JSON");
  sp->add_option("--verify-depth", verify_depth, "oracle depth (0 disables)");
  alphabet_opt(sp);

  auto* ca = app.add_subcommand("check-additive", "search a prefix for s(nm) != s(n) + s(m)");
  ca->add_option("--spec,-s", spec)->required();
  ca->add_option("--depth,-d", depth);
  alphabet_opt(ca);

  auto* cs = app.add_subcommand("check-similar", "check s = t + c on a prefix");
  cs->add_option("--spec,-s", spec)->required();
  cs->add_option("--spec2,-t", spec2)->required();
  cs->add_option("--depth,-d", depth);
  alphabet_opt(cs);

  auto* scan = app.add_subcommand("as-scan", "similarity of every arithmetic subsequence on a grid");
  scan->add_option("--spec,-s", spec)->required();
  scan->add_option("--amax", amax)->check(CLI::PositiveNumber);
  scan->add_option("--bmax", bmax)->check(CLI::PositiveNumber);
  scan->add_option("--depth,-d", depth);
  alphabet_opt(scan);

  auto* embed = app.add_subcommand("keane-embed", "difference pattern of a Keane block, checked");
  embed->add_option("u", pattern_a)->required();
  embed->add_option("--depth,-d", depth);
  alphabet_opt(embed);

  auto* wit = app.add_subcommand("tm-witness", "y with m(y) = 0 and m(xy) = 1");
  wit->add_option("x", x)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const CyclicGroup group(alphabet);
    if (*gen) {
      Seq s = build_seq(parse_spec(spec, alphabet));
      write_prefix(std::cout, s, count, dump_format(format));
      return kOk;
    }
    if (*comp) {
      std::cout << compose(parse_pattern(pattern_a, group), parse_pattern(pattern_b, group)).to_string()
                << '\n';
      return kOk;
    }
    if (*pow) {
      std::cout << power(parse_pattern(pattern_a, group), power_k).to_string() << '\n';
      return kOk;
    }
    if (*classify) {
      Pattern p = parse_pattern(pattern_a, group);
      auto cert = is_additive_pattern(p);
      json out;
      out["pattern"] = p.to_string();
      out["verdict"] = cert.member ? "member" : "non-member";
      out["degenerate"] = cert.degenerate;
      out["detail"] = cert.detail;
      if (cert.evidence) {
        const auto& e = *cert.evidence;
        out.update({{"p", e.p}, {"g", e.g}, {"c", e.c}, {"d", e.d}, {"k", e.k}});
      }
      if (cert.member) {
        auto gen_result = generator_of(p);
        out["generator"] = gen_result.generator.to_string();
        out["infinite"] = gen_result.infinite;
      }
      if (cert.reason) out["reason"] = to_string(*cert.reason);
      if (cert.counterexample) {
        const auto& t = *cert.counterexample;
        out["counterexample"] = {{"i", t.i}, {"j", t.j}, {"k", t.k}};
      }
      std::cout << out.dump(2) << '\n';
      return kOk;
    }
    if (*sp) {
      auto result = subseq_pattern(parse_pattern(pattern_a, group), a, b, verify_depth);
      if (want_trace) {
        json out;
        out["input"] = result.trace.input.to_string();
        out["a"] = a;
        out["b"] = b;
        out["result"] = result.pattern.to_string();
        out["length"] = length_json(result.pattern.length());
        out["gaps"] = length_json(result.pattern.gap_count());
        out["verified_depth"] = verify_depth;
        out["steps"] = json::array();
        for (const auto& step : result.trace.steps) out["steps"].push_back(step_json(step));
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << result.pattern.to_string() << '\n';
      }
      return kOk;
    }
    if (*ca) {
      Seq s = build_seq(parse_spec(spec, alphabet));
      if (auto bad = check_additive_prefix(s, depth)) {
        std::cout << "counterexample n=" << bad->first << " m=" << bad->second << '\n';
        return kFalsified;
      }
      std::cout << "additive up to " << depth << '\n';
      return kOk;
    }
    if (*cs) {
      auto v = similar_up_to(build_seq(parse_spec(spec, alphabet)), build_seq(parse_spec(spec2, alphabet)),
                             depth);
      std::cout << v.to_string() << '\n';
      return v.similar() ? kOk : kFalsified;
    }
    if (*scan) {
      Seq s = build_seq(parse_spec(spec, alphabet));
      for (const auto& cell : as_scan(s, amax, bmax, depth)) {
        std::cout << cell.a << ' ' << cell.b << ' ' << cell.verdict.to_string() << '\n';
      }
      return kOk;
    }
    if (*embed) {
      Word u = parse_word(pattern_a, group);
      Pattern p = delta_t(u);
      std::cout << p.to_string() << '\n';
      if (u.size() < 2) return kOk;
      auto got = toeplitz_prefix(p, depth);
      auto want = diff(keane_word(u)).prefix(depth);
      bool ok = got == want;
      std::cout << (ok ? "verified" : "MISMATCH") << " to depth " << depth << '\n';
      return ok ? kOk : kFalsified;
    }
    if (*wit) {
      std::uint64_t y = tm_witness(x);
      std::cout << "y=" << y << " m(y)=" << thue_morse(y) << " m(xy)=" << thue_morse(x * y) << '\n';
      return kOk;
    }
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFalsified;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
