#pragma once

// Command-line front end: compute, normalize, verify, explain, bench, selftest.
// Exit codes: 0 success, 1 verification/selftest failure, 2 invalid input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "wgcd/wgcd.hpp"

namespace wgcd::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kInvalid = 2;

struct Request {
  std::string weights;
  std::string values;
  std::string strategy = "auto";
  std::string claim;
  bool json = false;
  std::uint64_t seed = 0;
  // bench
  std::string spec_file;
  std::string out_file;
  std::string format = "json";
  std::size_t reps = 3;
  std::size_t threads = 1;
};

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline ordered_json string_array(const std::vector<Integer>& xs) {
  ordered_json arr = ordered_json::array();
  for (const auto& x : xs) arr.push_back(to_decimal(x));
  return arr;
}

inline ordered_json counters_json(const Counters& c) {
  return {{"factor_calls", c.factor_calls}, {"max_factored_bits", c.max_factored_bits}, {"gcd_calls", c.gcd_calls}};
}

inline WeightedTuple read_tuple(const Request& req) {
  return WeightedTuple(parse_values(req.values), parse_weights(req.weights));
}

inline int run_compute(const Request& req, std::ostream& out) {
  const WeightedTuple t = read_tuple(req);
  Context ctx(req.seed);
  const WgcdResult r = compute(t, parse_strategy(req.strategy), ctx);
  if (req.json) {
    out << ordered_json{{"d", to_decimal(r.d)}, {"strategy", r.strategy}, {"counters", counters_json(r.counters)}}.dump()
        << '\n';
  } else {
    out << r.d << '\n';
  }
  return kOk;
}

inline int run_normalize(const Request& req, std::ostream& out) {
  Context ctx(req.seed);
  const Normalized n = normalize(read_tuple(req), ctx);
  if (req.json) {
    out << ordered_json{{"values", string_array(n.tuple.values())}, {"d", to_decimal(n.d)}}.dump() << '\n';
  } else {
    out << join_values(n.tuple.values()) << " d=" << n.d << '\n';
  }
  return kOk;
}

inline int run_verify(const Request& req, std::ostream& out) {
  if (req.claim.empty()) throw InvalidInput("verify: --claim is required");
  const WeightedTuple t = read_tuple(req);
  const Nat claim = parse_integer(req.claim);
  Context ctx(req.seed);
  const Verdict v = verify_wgcd(t, claim, ctx);
  if (req.json) {
    out << ordered_json{{"ok", v.ok}, {"reason", std::string(to_string(v.reason))}}.dump() << '\n';
  } else {
    out << to_string(v.reason) << '\n';
  }
  return v.ok ? kOk : kFailed;
}

inline int run_explain(const Request& req, std::ostream& out) {
  const WeightedTuple t = read_tuple(req);
  Context ctx(req.seed);
  const WgcdResult r = wgcd_auto(t, ctx);
  if (req.json) {
    ordered_json steps = ordered_json::array();
    for (const auto& s : r.trace.steps) {
      steps.push_back({{"rule", std::string(to_string(s.rule))},
                       {"weights", s.tuple.weights().values()},
                       {"values", string_array(s.tuple.values())}});
    }
    out << ordered_json{{"input", {{"weights", t.weights().values()}, {"values", string_array(t.values())}}},
                        {"steps", std::move(steps)},
                        {"d", to_decimal(r.d)},
                        {"counters", counters_json(r.counters)}}
               .dump()
        << '\n';
  } else {
    out << "input: " << to_string(t) << '\n';
    for (const auto& s : r.trace.steps) out << "  " << to_string(s.rule) << ": " << to_string(s.tuple) << '\n';
    out << "d=" << r.d << '\n';
  }
  return kOk;
}

inline std::vector<GenSpec> default_bench_specs() {
  std::vector<GenSpec> specs;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    specs.push_back({seed, 2, {2, 3}, 16, 96, GenMode::known_answer});
    specs.push_back({seed, 3, {2, 2, 3}, 16, 64, GenMode::known_answer});
    specs.push_back({seed, 2, {2, 3}, 16, 64, GenMode::adversarial_deficient});
  }
  return specs;
}

inline int run_bench(const Request& req, std::ostream& out) {
  std::vector<GenSpec> specs;
  if (req.spec_file.empty()) {
    specs = default_bench_specs();
  } else {
    std::ifstream in(req.spec_file);
    if (!in) throw InvalidInput("bench: cannot read " + req.spec_file);
    std::stringstream buf;
    buf << in.rdbuf();
    specs = parse_gen_specs(buf.str());
  }
  std::vector<Strategy> strategies;
  if (req.strategy == "auto") {
    strategies = kBenchStrategies;  // default: everything practical
  } else {
    for (std::string_view name : wgcd::detail::split(req.strategy, ',')) strategies.push_back(parse_strategy(name));
  }
  const ReportFormat format = parse_report_format(req.format);
  const std::string report = bench_report(bench_run(specs, strategies, req.reps, req.threads), format);
  if (req.out_file.empty()) {
    out << report;
  } else {
    std::ofstream file(req.out_file);
    if (!file) throw InvalidInput("bench: cannot write " + req.out_file);
    file << report;
  }
  return kOk;
}

}  // namespace detail

/// Parses argv and runs the subcommand. Never throws.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted greatest common divisors of integer tuples"};
  app.require_subcommand(1);
  Request req;

  auto add_tuple_options = [&req](CLI::App* sub) {
    sub->add_option("--weights", req.weights, "comma-separated positive weights")->required();
    sub->add_option("--values", req.values, "comma-separated integers")->required()->allow_extra_args(false);
    sub->add_flag("--json", req.json, "JSON output");
    sub->add_option("--seed", req.seed, "factorization seed");
  };

  auto* compute_cmd = app.add_subcommand("compute", "print the weighted gcd");
  add_tuple_options(compute_cmd);
  compute_cmd->add_option("--strategy", req.strategy, "auto|oracle|full-factor|gcd-factor|lcm-power|fold");

  auto* normalize_cmd = app.add_subcommand("normalize", "divide out the weighted gcd");
  add_tuple_options(normalize_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "check a claimed weighted gcd");
  add_tuple_options(verify_cmd);
  verify_cmd->add_option("--claim", req.claim, "claimed wgcd")->required();

  auto* explain_cmd = app.add_subcommand("explain", "print the reduction trace of the auto strategy");
  add_tuple_options(explain_cmd);

  auto* bench_cmd = app.add_subcommand("bench", "time strategies on generated tuples");
  bench_cmd->add_option("--spec", req.spec_file, "JSON array of generator specs");
  bench_cmd->add_option("--out", req.out_file, "report file (default stdout)");
  bench_cmd->add_option("--format", req.format, "json|csv");
  bench_cmd->add_option("--reps", req.reps, "repetitions per cell")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--strategy", req.strategy, "comma-separated strategies");
  bench_cmd->add_option("--threads", req.threads, "worker threads")->check(CLI::PositiveNumber);

  auto* selftest_cmd = app.add_subcommand("selftest", "run the worked examples through every strategy");
  selftest_cmd->add_option("--seed", req.seed, "factorization seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }

  try {
    if (*compute_cmd) return detail::run_compute(req, out);
    if (*normalize_cmd) return detail::run_normalize(req, out);
    if (*verify_cmd) return detail::run_verify(req, out);
    if (*explain_cmd) return detail::run_explain(req, out);
    if (*bench_cmd) return detail::run_bench(req, out);
    if (*selftest_cmd) return run_selftest(out, req.seed) ? kOk : kFailed;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const ScanLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const BenchDisagreement& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace wgcd::cli
