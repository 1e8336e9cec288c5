#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dwo/error.hpp"
#include "dwo/gen.hpp"
#include "dwo/io.hpp"
#include "dwo/oracle.hpp"
#include "dwo/reduction.hpp"
#include "dwo/relations.hpp"

namespace dwo::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kBadInput = 2;
inline constexpr int kUnsolvable = 3;  // incomplete profile for the cut solver, oracle cap
inline constexpr int kInvariant = 4;   // solver and oracle disagree

namespace detail {

inline void emit(std::ostream& out, const io::Json& doc) { out << doc.dump(2) << '\n'; }

struct SolveArgs {
  std::string input;
  std::string variant = "contracted";
  bool nonempty = false;
  bool breakdown = false;
  bool check_oracle = false;
  std::size_t oracle_cap = oracle::kDefaultCap;
};

inline int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  const Profile p = io::read_profile_file(args.input);
  const Variant variant = *parse_variant(args.variant);
  SolveResult r = args.nonempty ? solve_nonempty(p, args.breakdown)
                                : solve(p, variant, args.breakdown);
  std::optional<bool> agreement;
  if (args.check_oracle) {
    const auto truth = oracle::brute_force(p, args.oracle_cap, args.nonempty);
    agreement = truth.disagreements == r.disagreements;
  }
  auto doc = io::result_to_json(r, args.nonempty ? "contracted" : to_string(variant), agreement);
  if (args.nonempty) doc["nonempty"] = true;
  emit(out, doc);
  if (agreement == false) {
    err << "error: cut solver and oracle disagree\n";
    return kInvariant;
  }
  return kOk;
}

inline int cmd_score(const std::string& input, const std::string& order_expr, std::ostream& out,
                     std::ostream& err) {
  const Profile p = io::read_profile_file(input);
  const DichotomousOrder o = io::parse_order(p.universe(), order_expr);
  const Count s = score(p, o);
  io::Json doc{{"order", io::order_to_json(o)}, {"score", s}};
  const PairStats st = pair_stats(p);
  if (st.complete()) {
    const Count closed = score_closed_form(st, o);
    doc["score_closed_form"] = closed;
    if (closed != s) {
      emit(out, doc);
      err << "error: closed-form score differs from the direct count\n";
      return kInvariant;
    }
  }
  emit(out, doc);
  return kOk;
}

inline int cmd_oracle(const std::string& input, std::size_t cap, bool nonempty,
                      std::ostream& out) {
  const Profile p = io::read_profile_file(input);
  const auto r = oracle::brute_force(p, cap, nonempty);
  auto doc = io::result_to_json(r, "oracle");
  if (nonempty) doc["nonempty"] = true;
  emit(out, doc);
  return kOk;
}

struct GenArgs {
  std::size_t m = 0;
  std::size_t n = 0;
  std::string model = "weak_order";
  std::uint64_t seed = 0;
  std::string output = "-";
};

inline int cmd_gen(const GenArgs& args, std::ostream& out) {
  const Profile p = gen::gen_profile(args.m, args.n, *gen::parse_model(args.model), args.seed);
  const std::string text = io::profile_to_json(p).dump(2) + "\n";
  if (args.output == "-") {
    out << text;
    return kOk;
  }
  std::ofstream f(args.output, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) throw io::IoError("cannot write '" + args.output + "'");
  return kOk;
}

struct BenchArgs {
  std::vector<std::size_t> m_list;
  std::size_t n = 100;
  std::string model = "weak_order";
  std::uint64_t seed = 1;
  std::string variant = "both";
};

/// Tab-separated table, one row per (m, variant).
inline int cmd_bench(const BenchArgs& args, std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  auto ms = [](Clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
  const auto model = *gen::parse_model(args.model);
  std::vector<Variant> variants;
  if (args.variant != "contracted") variants.push_back(Variant::literal);
  if (args.variant != "literal") variants.push_back(Variant::contracted);

  out << "m\tn\tmodel\tvariant\tnodes\tarcs\tstats_ms\tbuild_ms\tcut_ms\tdisagreements\n";
  for (std::size_t m : args.m_list) {
    const Profile p = gen::gen_profile(m, args.n, model, args.seed);
    require_complete(p);
    for (Variant v : variants) {
      const auto t0 = Clock::now();
      const PairStats st = pair_stats(p);
      const auto t1 = Clock::now();
      auto [net, layout] =
          v == Variant::literal ? build_literal_network(st) : build_contracted_network(st);
      const auto t2 = Clock::now();
      const auto cut = min_cut(net);
      const auto t3 = Clock::now();
      const auto order = extract_order(cut, layout, p.universe());
      if (score(p, order) != cut.capacity) throw InternalError("cut capacity differs from score");
      out << m << '\t' << args.n << '\t' << args.model << '\t' << to_string(v) << '\t'
          << net.node_count() << '\t' << net.arcs().size() << '\t' << std::fixed
          << std::setprecision(3) << ms(t1 - t0) << '\t' << ms(t2 - t1) << '\t' << ms(t3 - t2)
          << '\t' << cut.capacity << '\n';
      out.unsetf(std::ios::floatfield);
    }
  }
  return kOk;
}

}  // namespace detail

/// Runs the command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal dichotomous weak orders for preference profiles via minimum cuts"};
  app.require_subcommand(1);

  detail::SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Optimal order by minimum cut");
  solve_cmd->add_option("input", solve_args.input, "Profile file (JSON or text)")->required();
  solve_cmd->add_option("--variant", solve_args.variant, "Network form")
      ->check(CLI::IsMember({"literal", "contracted"}));
  solve_cmd->add_flag("--nonempty", solve_args.nonempty, "Require both classes nonempty");
  solve_cmd->add_flag("--breakdown", solve_args.breakdown, "Report per-pair costs");
  solve_cmd->add_flag("--check-oracle", solve_args.check_oracle,
                      "Verify optimality by exhaustive enumeration");
  solve_cmd->add_option("--oracle-cap", solve_args.oracle_cap, "Largest m for the oracle");

  std::string score_input, order_expr;
  auto* score_cmd = app.add_subcommand("score", "Disagreements of a fixed order");
  score_cmd->add_option("input", score_input, "Profile file")->required();
  score_cmd->add_option("--order", order_expr, "Order such as \"a b > c\"")->required();

  std::string oracle_input;
  std::size_t oracle_cap = oracle::kDefaultCap;
  bool oracle_nonempty = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Optimal order by exhaustive enumeration");
  oracle_cmd->add_option("input", oracle_input, "Profile file")->required();
  oracle_cmd->add_option("--cap", oracle_cap, "Largest m to enumerate");
  oracle_cmd->add_flag("--nonempty", oracle_nonempty, "Require both classes nonempty");

  detail::GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Write a seeded random profile");
  gen_cmd->add_option("--m", gen_args.m, "Alternatives")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--n", gen_args.n, "Voters")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--model", gen_args.model, "Voter model")
      ->check(CLI::IsMember({"dichotomous", "weak_order", "complete_relation", "reflexive_relation"}));
  gen_cmd->add_option("--seed", gen_args.seed, "Seed");
  gen_cmd->add_option("-o,--output", gen_args.output, "Output path, '-' for stdout");

  detail::BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Time both network forms on generated profiles");
  bench_cmd->add_option("--m-list", bench_args.m_list, "Comma-separated alternative counts")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--n", bench_args.n, "Voters")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--model", bench_args.model, "Voter model (complete models only)")
      ->check(CLI::IsMember({"dichotomous", "weak_order", "complete_relation"}));
  bench_cmd->add_option("--seed", bench_args.seed, "Seed");
  bench_cmd->add_option("--variant", bench_args.variant, "literal, contracted or both")
      ->check(CLI::IsMember({"literal", "contracted", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*solve_cmd) return detail::cmd_solve(solve_args, out, err);
    if (*score_cmd) return detail::cmd_score(score_input, order_expr, out, err);
    if (*oracle_cmd) return detail::cmd_oracle(oracle_input, oracle_cap, oracle_nonempty, out);
    if (*gen_cmd) return detail::cmd_gen(gen_args, out);
    if (*bench_cmd) return detail::cmd_bench(bench_args, out);
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kBadInput;
  } catch (const io::IoError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const IncompleteRelationError& e) {
    err << "error: " << e.what() << '\n';
    return kUnsolvable;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUnsolvable;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    // ValidationError, UniverseMismatch
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace dwo::cli
