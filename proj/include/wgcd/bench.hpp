#pragma once

// Benchmark harness: generate tuples from specs, time every requested
// strategy, cross-check their answers, and report as JSON or CSV.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "wgcd/generators.hpp"
#include "wgcd/pipeline.hpp"

namespace wgcd {

/// Two strategies (or a strategy and the known answer) disagreed.
class BenchDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StrategyTiming {
  std::string strategy;
  std::uint64_t ns_median = 0;
  Counters counters;
  Nat d;

  friend bool operator==(const StrategyTiming&, const StrategyTiming&) = default;
};

struct BenchRecord {
  GenSpec spec;
  std::vector<StrategyTiming> results;
  bool agreement = false;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct BenchInstance {
  WeightedTuple tuple;
  std::optional<Nat> expected_d;
};

[[nodiscard]] inline BenchInstance make_instance(const GenSpec& spec) {
  switch (spec.mode) {
    case GenMode::known_answer: {
      auto k = gen_known(spec);
      return {std::move(k.tuple), std::move(k.expected_d)};
    }
    case GenMode::random: return {gen_random(spec), std::nullopt};
    case GenMode::adversarial_deficient: return {gen_adversarial(spec), std::nullopt};
  }
  throw InvalidInput("unknown generator mode");
}

/// Strategies that are practical on generated inputs (the oracle is not).
inline const std::vector<Strategy> kBenchStrategies = {Strategy::automatic, Strategy::full_factor,
                                                       Strategy::gcd_factor, Strategy::lcm_power, Strategy::fold};

/// Throws BenchDisagreement unless every strategy in the record returned the
/// same d (and that d matches the known answer, when there is one).
inline void check_agreement(const BenchRecord& rec, const WeightedTuple& tuple, const std::optional<Nat>& expected) {
  for (const auto& r : rec.results) {
    const bool matches_first = r.d == rec.results.front().d;
    const bool matches_known = !expected || r.d == *expected;
    if (!matches_first || !matches_known) {
      std::ostringstream msg;
      msg << "strategy disagreement on seed " << rec.spec.seed << " (" << to_string(tuple) << "): " << r.strategy
          << " gave " << r.d;
      if (expected) msg << ", expected " << *expected;
      throw BenchDisagreement(msg.str());
    }
  }
}

namespace detail {

inline BenchRecord bench_one(const GenSpec& spec, const std::vector<Strategy>& strategies, std::size_t reps) {
  const BenchInstance inst = make_instance(spec);
  BenchRecord rec{spec, {}, true};
  for (Strategy s : strategies) {
    StrategyTiming timing{std::string(to_string(s)), 0, {}, 0};
    std::vector<std::uint64_t> ns;
    for (std::size_t r = 0; r < reps; ++r) {
      Context ctx(spec.seed);
      const auto start = std::chrono::steady_clock::now();
      WgcdResult result = compute(inst.tuple, s, ctx);
      const auto stop = std::chrono::steady_clock::now();
      ns.push_back(static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
      if (r == 0) {
        timing.counters = result.counters;
        timing.d = std::move(result.d);
      }
    }
    std::nth_element(ns.begin(), ns.begin() + ns.size() / 2, ns.end());
    timing.ns_median = ns[ns.size() / 2];
    rec.results.push_back(std::move(timing));
  }
  check_agreement(rec, inst.tuple, inst.expected_d);
  return rec;
}

}  // namespace detail

/// Runs every spec through every strategy. Times are the median over `reps`;
/// counters and d come from the first repetition. Trials may run on up to
/// `threads` workers; records come back in spec order regardless.
/// Throws BenchDisagreement on the first mismatch.
[[nodiscard]] inline std::vector<BenchRecord> bench_run(const std::vector<GenSpec>& specs,
                                                        const std::vector<Strategy>& strategies, std::size_t reps,
                                                        std::size_t threads = 1) {
  if (reps < 1) throw InvalidInput("bench: repetitions must be >= 1");
  if (strategies.empty()) throw InvalidInput("bench: no strategies");
  for (const auto& s : specs) s.validate();

  std::vector<std::optional<BenchRecord>> slots(specs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size() && !failed; i = next++) {
      try {
        slots[i] = detail::bench_one(specs[i], strategies, reps);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(specs.size(), 1));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<BenchRecord> out;
  out.reserve(specs.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// --- serialization ---------------------------------------------------------

using ordered_json = nlohmann::ordered_json;

[[nodiscard]] inline ordered_json to_json(const GenSpec& s) {
  return {{"seed", s.seed},
          {"n", s.n_plus_1},
          {"weights", s.weights.values()},
          {"d_bits", s.d_bits},
          {"cofactor_bits", s.cofactor_bits},
          {"mode", std::string(to_string(s.mode))}};
}

/// Accepts the "spec" object of a report, or an element of a --spec file.
/// "n" is the tuple length and may be omitted when weights are given.
[[nodiscard]] inline GenSpec gen_spec_from_json(const nlohmann::json& j) {
  try {
    GenSpec s;
    s.seed = j.value("seed", std::uint64_t{0});
    std::vector<Weight> q = j.at("weights").get<std::vector<Weight>>();
    s.n_plus_1 = j.value("n", q.size());
    s.weights = WeightVector(std::move(q));
    s.d_bits = j.value("d_bits", std::uint64_t{16});
    s.cofactor_bits = j.value("cofactor_bits", std::uint64_t{128});
    s.mode = parse_gen_mode(j.value("mode", std::string("known-answer")));
    s.validate();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("gen spec: ") + e.what());
  }
}

[[nodiscard]] inline std::vector<GenSpec> parse_gen_specs(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("gen specs: ") + e.what());
  }
  if (!j.is_array()) throw InvalidInput("gen specs: expected a JSON array");
  std::vector<GenSpec> specs;
  for (const auto& item : j) specs.push_back(gen_spec_from_json(item));
  return specs;
}

[[nodiscard]] inline ordered_json to_json(const BenchRecord& r) {
  ordered_json results = ordered_json::array();
  for (const auto& t : r.results) {
    results.push_back({{"strategy", t.strategy},
                       {"ns_median", t.ns_median},
                       {"factor_calls", t.counters.factor_calls},
                       {"max_factored_bits", t.counters.max_factored_bits},
                       {"gcd_calls", t.counters.gcd_calls},
                       {"d", to_decimal(t.d)}});
  }
  return {{"spec", to_json(r.spec)}, {"results", std::move(results)}, {"agreement", r.agreement}};
}

enum class ReportFormat { json, csv };

[[nodiscard]] inline ReportFormat parse_report_format(std::string_view s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  throw InvalidInput("unknown report format '" + std::string(s) + "'");
}

inline constexpr std::string_view kCsvHeader =
    "seed,n,weights,d_bits,cofactor_bits,mode,strategy,ns_median,factor_calls,max_factored_bits,gcd_calls,d,"
    "agreement";

/// JSON: an array of {"spec", "results", "agreement"}. CSV: one row per
/// (spec, strategy) under kCsvHeader; weights are ';'-separated.
[[nodiscard]] inline std::string bench_report(const std::vector<BenchRecord>& records, ReportFormat format) {
  if (format == ReportFormat::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    return arr.dump(records.empty() ? -1 : 2) + "\n";
  }
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    for (const auto& t : r.results) {
      out << r.spec.seed << ',' << r.spec.n_plus_1 << ',' << join_weights(r.spec.weights, ";") << ','
          << r.spec.d_bits << ',' << r.spec.cofactor_bits << ',' << to_string(r.spec.mode) << ',' << t.strategy << ','
          << t.ns_median << ',' << t.counters.factor_calls << ',' << t.counters.max_factored_bits << ','
          << t.counters.gcd_calls << ',' << to_decimal(t.d) << ',' << (r.agreement ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

/// Inverse of the JSON report.
[[nodiscard]] inline std::vector<BenchRecord> parse_report(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    std::vector<BenchRecord> out;
    for (const auto& item : j) {
      BenchRecord r;
      r.spec = gen_spec_from_json(item.at("spec"));
      r.agreement = item.at("agreement").get<bool>();
      for (const auto& res : item.at("results")) {
        StrategyTiming t;
        t.strategy = res.at("strategy").get<std::string>();
        t.ns_median = res.at("ns_median").get<std::uint64_t>();
        t.counters.factor_calls = res.at("factor_calls").get<std::uint64_t>();
        t.counters.max_factored_bits = res.at("max_factored_bits").get<std::uint64_t>();
        t.counters.gcd_calls = res.at("gcd_calls").get<std::uint64_t>();
        t.d = parse_integer(res.at("d").get<std::string>());
        r.results.push_back(std::move(t));
      }
      out.push_back(std::move(r));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bench report: ") + e.what());
  }
}

}  // namespace wgcd
