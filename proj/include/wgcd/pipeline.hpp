#pragma once

// The auto pipeline (reductions first, then the cheapest factorization),
// normalization, verification of a claimed wgcd, and strategy dispatch.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wgcd/context.hpp"
#include "wgcd/reductions.hpp"
#include "wgcd/strategies.hpp"
#include "wgcd/tuple.hpp"

namespace wgcd {

enum class Rule {
  abs,
  permute,
  suffix_gcd,
  pair_remainder,
  gcd_prefix,
  fold,
  fastpath_one,
  fastpath_equal_weights,
};

[[nodiscard]] constexpr std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::abs: return "abs";
    case Rule::permute: return "permute";
    case Rule::suffix_gcd: return "suffix-gcd";
    case Rule::pair_remainder: return "pair-remainder";
    case Rule::gcd_prefix: return "gcd-prefix";
    case Rule::fold: return "fold";
    case Rule::fastpath_one: return "fastpath-one";
    case Rule::fastpath_equal_weights: return "fastpath-equal-weights";
  }
  return "?";
}

struct TraceStep {
  Rule rule;
  WeightedTuple tuple;  // state after the rule
};

struct ReductionTrace {
  std::vector<TraceStep> steps;
};

struct WgcdResult {
  Nat d;
  std::string strategy;
  ReductionTrace trace;
  Counters counters;
};

/// Re-applies one traced rule. Fast paths and fold leave the tuple as is.
[[nodiscard]] inline WeightedTuple replay_step(Rule rule, const WeightedTuple& t) {
  switch (rule) {
    case Rule::abs: return abs_values(t);
    case Rule::permute: return sort_by_weight(t).tuple;
    case Rule::suffix_gcd: return reduce_suffix_gcd(t);
    case Rule::gcd_prefix: return reduce_gcd_prefix(t);
    case Rule::pair_remainder: {
      auto [a, b] = reduce_pair_remainder(t.value(0), t.value(1), t.weight(0), t.weight(1));
      return WeightedTuple({std::move(a), std::move(b)}, t.weights());
    }
    case Rule::fold:
    case Rule::fastpath_one:
    case Rule::fastpath_equal_weights: return t;
  }
  return t;
}

/// abs -> sort by weight -> suffix gcds -> fast paths -> (pairs) remainder
/// steps -> factor only the gcd of what is left.
/// Resets the context's counters; the result carries this run's totals.
[[nodiscard]] inline WgcdResult wgcd_auto(const WeightedTuple& input, Context& ctx) {
  ctx.reset_counters();
  WgcdResult result{1, "auto", {}, {}};
  auto& steps = result.trace.steps;

  WeightedTuple t = abs_values(input);
  steps.push_back({Rule::abs, t});
  t = sort_by_weight(t).tuple;
  steps.push_back({Rule::permute, t});
  t = reduce_suffix_gcd(t, ctx);
  steps.push_back({Rule::suffix_gcd, t});

  auto finish = [&](Nat d) {
    result.d = std::move(d);
    result.counters = ctx.counters();
    return std::move(result);
  };

  if (std::any_of(t.values().begin(), t.values().end(), [](const Integer& y) { return y == 1; })) {
    steps.push_back({Rule::fastpath_one, t});
    return finish(1);
  }
  if (t.weights().all_equal()) {
    steps.push_back({Rule::fastpath_equal_weights, t});
    return finish(wgcd_single(t.value(0), t.weight(0), ctx));
  }

  if (t.size() == 2 && t.weight(0) < t.weight(1)) {
    while (sgn(t.value(0)) > 0 && sgn(t.value(1)) > 0) {
      auto [a, b] = reduce_pair_remainder(t.value(0), t.value(1), t.weight(0), t.weight(1), ctx);
      if (a == t.value(0)) break;
      t = WeightedTuple({std::move(a), std::move(b)}, t.weights());
      steps.push_back({Rule::pair_remainder, t});
    }
  }

  return finish(wgcd_gcd_factorization(t, ctx));
}

[[nodiscard]] inline WgcdResult wgcd_auto(const WeightedTuple& t) {
  Context ctx;
  return wgcd_auto(t, ctx);
}

struct Normalized {
  WeightedTuple tuple;
  Nat d;
};

/// (x_i / d^q_i) with signs kept, where d is the wgcd. The result has wgcd 1.
[[nodiscard]] inline Normalized normalize(const WeightedTuple& t, Context& ctx) {
  Nat d = wgcd_auto(t, ctx).d;
  std::vector<Integer> xs;
  xs.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), t.value(i).get_mpz_t(), ipow(d, t.weight(i)).get_mpz_t());
    xs.push_back(std::move(q));
  }
  return {WeightedTuple(std::move(xs), t.weights()), std::move(d)};
}

[[nodiscard]] inline Normalized normalize(const WeightedTuple& t) {
  Context ctx;
  return normalize(t, ctx);
}

enum class VerifyFailure { none, divisibility, maximality };

[[nodiscard]] constexpr std::string_view to_string(VerifyFailure f) {
  switch (f) {
    case VerifyFailure::none: return "ok";
    case VerifyFailure::divisibility: return "divisibility";
    case VerifyFailure::maximality: return "maximality";
  }
  return "?";
}

struct Verdict {
  bool ok = false;
  VerifyFailure reason = VerifyFailure::none;
};

/// Checks d^q_i | x_i for every i, then that no prime p of the normalized
/// gcd still satisfies p^q_i | x_i / d^q_i for all i.
[[nodiscard]] inline Verdict verify_wgcd(const WeightedTuple& t, const Nat& d, Context& ctx) {
  if (d < 1) throw InvalidInput("verify: claimed d must be >= 1");
  std::vector<Integer> reduced;
  reduced.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Nat power = ipow(d, t.weight(i));
    if (!mpz_divisible_p(t.value(i).get_mpz_t(), power.get_mpz_t())) return {false, VerifyFailure::divisibility};
    Integer q;
    mpz_divexact(q.get_mpz_t(), t.value(i).get_mpz_t(), power.get_mpz_t());
    reduced.push_back(std::move(q));
  }
  const Nat g = ctx.gcd_all(reduced);
  if (g == 1) return {true, VerifyFailure::none};
  for (const auto& entry : ctx.factor(g)) {
    bool extends = true;
    for (std::size_t i = 0; i < reduced.size() && extends; ++i) {
      extends = mpz_divisible_p(reduced[i].get_mpz_t(), ipow(entry.prime, t.weight(i)).get_mpz_t()) != 0;
    }
    if (extends) return {false, VerifyFailure::maximality};
  }
  return {true, VerifyFailure::none};
}

[[nodiscard]] inline Verdict verify_wgcd(const WeightedTuple& t, const Nat& d) {
  Context ctx;
  return verify_wgcd(t, d, ctx);
}

enum class Strategy { automatic, oracle, full_factor, gcd_factor, lcm_power, fold };

inline constexpr std::array<Strategy, 6> kAllStrategies = {Strategy::automatic,  Strategy::oracle,
                                                          Strategy::full_factor, Strategy::gcd_factor,
                                                          Strategy::lcm_power,  Strategy::fold};

[[nodiscard]] constexpr std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::automatic: return "auto";
    case Strategy::oracle: return "oracle";
    case Strategy::full_factor: return "full-factor";
    case Strategy::gcd_factor: return "gcd-factor";
    case Strategy::lcm_power: return "lcm-power";
    case Strategy::fold: return "fold";
  }
  return "?";
}

[[nodiscard]] inline Strategy parse_strategy(std::string_view name) {
  for (Strategy s : kAllStrategies) {
    if (to_string(s) == name) return s;
  }
  throw InvalidInput("unknown strategy '" + std::string(name) + "'");
}

/// Candidate cap for the oracle when invoked through compute().
inline constexpr std::uint64_t kOracleScanCap = 10'000'000;

/// Runs one strategy with fresh counters. Only auto fills in the trace.
[[nodiscard]] inline WgcdResult compute(const WeightedTuple& t, Strategy s, Context& ctx,
                                        std::uint64_t oracle_cap = kOracleScanCap) {
  if (s == Strategy::automatic) return wgcd_auto(t, ctx);
  ctx.reset_counters();
  WgcdResult r{1, std::string(to_string(s)), {}, {}};
  switch (s) {
    case Strategy::oracle: r.d = wgcd_bruteforce(t, oracle_cap); break;
    case Strategy::full_factor: r.d = wgcd_full_factorization(t, ctx); break;
    case Strategy::gcd_factor: r.d = wgcd_gcd_factorization(t, ctx); break;
    case Strategy::lcm_power: r.d = wgcd_lcm_power(t, ctx); break;
    case Strategy::fold: r.d = wgcd_fold(t, ctx); break;
    case Strategy::automatic: break;
  }
  r.counters = ctx.counters();
  return r;
}

[[nodiscard]] inline WgcdResult compute(const WeightedTuple& t, Strategy s) {
  Context ctx;
  return compute(t, s, ctx);
}

}  // namespace wgcd
