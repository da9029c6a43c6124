#pragma once

// Command-line front end. run_cli() is the whole program; main() only binds
// it to the process streams so that tests can drive it in-process.
//
// Exit codes: 0 success, 1 usage / parse / invalid input, 2 stable-range
// violation, 3 verification mismatch.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "branchkit/branchkit.hpp"

namespace branchkit::cli {

using nlohmann::json;

enum ExitCode : int { Ok = 0, Usage = 1, OutOfRange = 2, Mismatch = 3 };

inline json to_json(const Partition& p) { return json(p.parts()); }

inline json to_json(const RepLabel& l) {
  if (l.family() == Family::GL) {
    return json{{"plus", to_json(l.gl_label().plus)}, {"minus", to_json(l.gl_label().minus)}};
  }
  return to_json(l.partition());
}

/// Text key for one or two H labels in a decomposition.
inline std::string label_key(const std::vector<RepLabel>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? " x " : "") + to_string(labels[i]);
  return out;
}

/// "plus/minus" reads as a GL label, anything else as a partition.
inline LabelData parse_label(const std::string& text) {
  if (text.find('/') != std::string::npos) return parse_gl_label(text);
  return parse_partition(text);
}

struct QueryArgs {
  std::string pair;
  int n = 0;
  int m = 0;
  std::vector<std::string> big;
  std::vector<std::string> small;
  std::string format = "json";
  bool unsafe = false;
};

inline json query_echo(Pair pair, Ranks r, const std::vector<RepLabel>& big, const std::vector<RepLabel>* small) {
  json q{{"pair", std::string(pair_id(pair))}, {"n", r.n}};
  if (is_direct_sum(pair)) q["m"] = r.m;
  q["big"] = json::array();
  for (const auto& l : big) q["big"].push_back(to_json(l));
  if (small) {
    q["small"] = json::array();
    for (const auto& l : *small) q["small"].push_back(to_json(l));
  }
  return q;
}

inline std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

inline std::vector<LabelData> parse_labels(const std::vector<std::string>& texts) {
  std::vector<LabelData> out;
  for (const auto& t : texts) out.push_back(parse_label(t));
  return out;
}

inline int cmd_branch(const QueryArgs& a, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Pair pair = parse_pair(a.pair);
  const Ranks ranks{a.n, a.m};
  auto big = parse_labels(a.big);
  auto small = parse_labels(a.small);
  // Diagonal pairs also accept "lambda in mu (x) nu" order: one label for the
  // constituent, two for the tensor factors.
  if (is_diagonal(pair) && big.size() == 1 && small.size() == 2) std::swap(big, small);
  const BranchingQuery q = make_query(pair, ranks, big, small);
  const bool in_range = !stable_range::check(q);
  const Multiplicity result = branching_multiplicity(q, a.unsafe);
  const auto ms = elapsed_ms(start);
  if (a.format == "tsv") {
    out << "pair\tn\tm\tbig\tsmall\tresult\tstable_range\telapsed_ms\n";
    out << pair_id(pair) << '\t' << ranks.n << '\t' << ranks.m << '\t' << label_key(q.big) << '\t'
        << label_key(q.small) << '\t' << result << '\t' << (in_range ? "true" : "false") << '\t' << ms << '\n';
  } else {
    json rec{{"query", query_echo(pair, ranks, q.big, &q.small)},
             {"result", result},
             {"stable_range", in_range},
             {"elapsed_ms", ms}};
    out << rec.dump() << '\n';
  }
  return Ok;
}

inline int cmd_decompose(const QueryArgs& a, int bound, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Pair pair = parse_pair(a.pair);
  const Ranks ranks{a.n, a.m};
  const auto big_data = parse_labels(a.big);
  const auto decomposition = branch_decompose(pair, ranks, big_data, bound, a.unsafe);
  // The G side alone decides whether the request was in range.
  std::vector<LabelData> empty_small;
  for (const auto& f : small_factors(pair, ranks)) {
    empty_small.push_back(f.family == Family::GL ? LabelData{GLLabel{}} : LabelData{Partition{}});
  }
  const BranchingQuery probe = make_query(pair, ranks, big_data, empty_small);
  const bool in_range = !stable_range::check_big(probe);
  const auto ms = elapsed_ms(start);
  if (a.format == "tsv") {
    out << "small\tmultiplicity\n";
    for (const auto& [labels, mult] : decomposition) out << label_key(labels) << '\t' << mult << '\n';
  } else {
    json result = json::object();
    for (const auto& [labels, mult] : decomposition) result[label_key(labels)] = mult;
    json rec{{"query", query_echo(pair, ranks, probe.big, nullptr)},
             {"result", result},
             {"stable_range", in_range},
             {"elapsed_ms", ms}};
    out << rec.dump() << '\n';
  }
  return Ok;
}

inline int cmd_lr(const std::string& outer, const std::string& left, const std::string& right,
                  const std::string& format, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Partition l = parse_partition(outer), mu = parse_partition(left), nu = parse_partition(right);
  const Multiplicity c = lr_coeff(l, mu, nu);
  const auto ms = elapsed_ms(start);
  if (format == "tsv") {
    out << "outer\tleft\tright\tresult\telapsed_ms\n";
    out << to_string(l) << '\t' << to_string(mu) << '\t' << to_string(nu) << '\t' << c << '\t' << ms << '\n';
  } else {
    json rec{{"query", {{"outer", to_json(l)}, {"left", to_json(mu)}, {"right", to_json(nu)}}},
             {"result", c},
             {"elapsed_ms", ms}};
    out << rec.dump() << '\n';
  }
  return Ok;
}

inline int cmd_verify(const std::string& pair_text, int max_size, std::size_t sample, std::uint64_t seed,
                      std::ostream& out) {
  std::vector<Pair> pairs;
  if (pair_text == "all") {
    pairs.assign(all_pairs.begin(), all_pairs.end());
  } else {
    pairs.push_back(parse_pair(pair_text));
  }
  bool ok = true;
  for (Pair p : pairs) {
    const auto s = verify_rule(p, max_size, sample, seed);
    out << pair_id(p) << ": " << s.cases << " cases, " << s.mismatches << " mismatches (" << s.nonzero
        << " nonzero, " << s.skipped << " skipped)\n";
    if (!s.passed()) {
      out << "  first counterexample: " << s.first_counterexample << '\n';
      ok = false;
    }
  }
  if (pair_text == "all") {
    const auto d = verify_dualities();
    out << "dualities: " << d.checks << " checks, " << d.failures << " failures\n";
    if (!d.passed()) {
      out << "  first failure: " << d.first_failure << '\n';
      ok = false;
    }
  }
  return ok ? Ok : Mismatch;
}

/// A few fixed queries with known answers; a quick health check of a build.
inline int cmd_selftest(std::ostream& out) {
  struct Case {
    std::string name;
    std::int64_t got;
    std::int64_t want;
  };
  auto gl = [](const char* t) { return LabelData{parse_gl_label(t)}; };
  auto pt = [](const char* t) { return LabelData{parse_partition(t)}; };
  std::vector<Case> cases{
      {"lr [3,2,1] [2,1] [2,1]", static_cast<std::int64_t>(lr_coeff({3, 2, 1}, {2, 1}, {2, 1})), 2},
      {"o-diag n=8 [1] [1] -> []",
       static_cast<std::int64_t>(branching_multiplicity(make_query(Pair::ODiagonal, {8, 0}, {pt("[1]"), pt("[1]")},
                                                                   {pt("[]")}))),
       1},
      {"o-in-gl n=6 [2]/[] -> []",
       static_cast<std::int64_t>(branching_multiplicity(make_query(Pair::OInGL, {6, 0}, {gl("[2]/[]")}, {pt("[]")}))),
       1},
      {"gl-in-sp n=6 [1,1] -> []/[] (oracle)",
       oracle_multiplicity(make_query(Pair::GLInSp, {6, 0}, {pt("[1,1]")}, {gl("[]/[]")})), 0},
      {"cauchy_gl n=2 p=2 d=2", duality_dim_check(DualityKind::CauchyGL, {2, 2}, 2) ? 1 : 0, 1},
  };
  bool ok = true;
  for (const auto& c : cases) {
    const bool pass = c.got == c.want;
    ok &= pass;
    out << (pass ? "ok   " : "FAIL ") << c.name << ": " << c.got << '\n';
  }
  return ok ? Ok : Mismatch;
}

inline void load_cache_from_env() {
  const char* path = std::getenv("BRANCHKIT_CACHE");
  if (!path || !*path) return;
  std::ifstream in(path);
  if (in) lr_cache().load(in);
}

inline void save_cache_to_env() {
  const char* path = std::getenv("BRANCHKIT_CACHE");
  if (!path || !*path) return;
  std::ofstream out(path);
  if (out) lr_cache().save(out);
}

inline void add_query_options(CLI::App* sub, QueryArgs& a) {
  sub->add_option("--pair", a.pair, "pair identifier, e.g. o-diag")->required();
  sub->add_option("-n", a.n, "rank n")->required();
  sub->add_option("-m", a.m, "rank m (direct sums)");
  sub->add_option("--format", a.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  sub->add_flag("--unsafe", a.unsafe, "evaluate the formula outside the stable range");
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable branching multiplicities for classical symmetric pairs"};
  app.require_subcommand(1);

  QueryArgs branch_args;
  auto* branch = app.add_subcommand("branch", "multiplicity of one H label in one G label");
  add_query_options(branch, branch_args);
  branch->add_option("--big", branch_args.big, "G label(s)")->required()->allow_extra_args(false)->expected(1, 2);
  branch->add_option("--small", branch_args.small, "H label(s)")->required()->allow_extra_args(false)->expected(1, 2);

  QueryArgs dec_args;
  int bound = -1;
  std::string mu, nu;
  auto* decompose = app.add_subcommand("decompose", "all H labels in a G label");
  add_query_options(decompose, dec_args);
  auto* big_opt = decompose->add_option("--big", dec_args.big, "G label(s)")->allow_extra_args(false)->expected(1, 2);
  auto* mu_opt = decompose->add_option("--mu", mu, "first tensor factor (diagonal pairs)");
  decompose->add_option("--nu", nu, "second tensor factor (diagonal pairs)")->needs(mu_opt);
  mu_opt->excludes(big_opt);
  decompose->add_option("--bound", bound, "largest H label size to consider");

  std::string outer, left, right, lr_format = "json";
  auto* lr = app.add_subcommand("lr", "a Littlewood-Richardson coefficient");
  lr->add_option("--outer", outer)->required();
  lr->add_option("--left", left)->required();
  lr->add_option("--right", right)->required();
  lr->add_option("--format", lr_format)->check(CLI::IsMember({"json", "tsv"}));

  std::string verify_pair;
  int max_size = 3;
  std::size_t sample = 0;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "compare formulas with the character oracle");
  verify->add_option("--pair", verify_pair, "pair identifier or 'all'")->required();
  verify->add_option("--max-size", max_size, "largest label size in the grid")->check(CLI::Range(0, 8));
  verify->add_option("--sample", sample, "check only this many random grid points");
  verify->add_option("--seed", seed, "seed for --sample");

  auto* selftest = app.add_subcommand("selftest", "run a few fixed checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return Usage;
  }

  load_cache_from_env();
  int code = Ok;
  try {
    if (*branch) {
      code = cmd_branch(branch_args, out);
    } else if (*decompose) {
      if (!mu.empty()) dec_args.big = {mu, nu.empty() ? "[]" : nu};
      if (dec_args.big.empty()) throw InvalidLabel("decompose needs --big or --mu/--nu");
      code = cmd_decompose(dec_args, bound, out);
    } else if (*lr) {
      code = cmd_lr(outer, left, right, lr_format, out);
    } else if (*verify) {
      code = cmd_verify(verify_pair, max_size, sample, seed, out);
    } else if (*selftest) {
      code = cmd_selftest(out);
    }
  } catch (const StableRangeViolation& e) {
    err << "StableRangeViolation: " << e.rule() << ": " << e.inequality() << '\n';
    out << json{{"error", {{"kind", "StableRangeViolation"}, {"rule", e.rule()}, {"inequality", e.inequality()}}}}.dump()
        << '\n';
    return OutOfRange;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return Usage;
  }
  save_cache_to_env();
  return code;
}

}  // namespace branchkit::cli
