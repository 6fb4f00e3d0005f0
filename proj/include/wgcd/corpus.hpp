#pragma once

// Worked examples with known answers, run by `wgcd selftest`.

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "wgcd/pipeline.hpp"
#include "wgcd/reductions.hpp"

namespace wgcd {

struct CorpusCase {
  WeightedTuple tuple;
  Nat expected;
};

[[nodiscard]] inline std::vector<CorpusCase> worked_examples() {
  auto c = [](std::vector<Integer> xs, WeightVector w, unsigned long d) {
    return CorpusCase{WeightedTuple(std::move(xs), std::move(w)), Nat(d)};
  };
  std::vector<CorpusCase> cases = {
      c({70352, 5760, 13824}, {2, 2, 3}, 4),
      c({5760, 13824}, {2, 3}, 24),
      c({13824, 5760}, {2, 3}, 4),
      c({8064, 5760}, {2, 3}, 4),
      c({2304, 5760}, {2, 3}, 4),
      c({1152, 13824}, {2, 3}, 24),
      c({2304, 13824}, {2, 3}, 24),
      c({70352, 13824}, {2, 3}, 4),
      c({1232, 13824}, {2, 3}, 4),
      c({1232, 2304, 13824}, {2, 2, 3}, 4),
      c({16, 1152, 13824}, {2, 2, 3}, 4),
      c({123456, 243226, 5789534, 234566, 4322166}, {7, 5, 3, 2, 9}, 1),
      c({234566, 5789534, 243226, 123456, 4322166}, {2, 3, 5, 7, 9}, 1),
      c({2, 2, 2, 6, 4322166}, {2, 3, 5, 7, 9}, 1),
      c({8, 4}, {2, 3}, 1),
      c({12, 18}, {1, 1}, 6),
  };
  for (unsigned long p : {2ul, 3ul, 5ul}) cases.push_back(c({p * p, p * p * p}, {2, 3}, p));
  return cases;
}

struct ReductionCheck {
  std::string name;
  std::function<bool()> holds;
};

/// Intermediate tuples from the worked examples, reproduced exactly.
[[nodiscard]] inline std::vector<ReductionCheck> worked_reductions() {
  using V = std::vector<Integer>;
  return {
      {"suffix-gcd (2,2,3) (70352,5760,13824) -> (16,1152,13824)",
       [] {
         return reduce_suffix_gcd(WeightedTuple({70352, 5760, 13824}, {2, 2, 3})).values() == V{16, 1152, 13824};
       }},
      {"permute (7,5,3,2,9) -> (2,3,5,7,9) values (234566,5789534,243226,123456,4322166)",
       [] {
         const auto s = sort_by_weight(WeightedTuple({123456, 243226, 5789534, 234566, 4322166}, {7, 5, 3, 2, 9}));
         return s.tuple.weights() == WeightVector{2, 3, 5, 7, 9} &&
                s.tuple.values() == V{234566, 5789534, 243226, 123456, 4322166};
       }},
      {"suffix-gcd (2,3,5,7,9) -> (2,2,2,6,4322166)",
       [] {
         return reduce_suffix_gcd(WeightedTuple({234566, 5789534, 243226, 123456, 4322166}, {2, 3, 5, 7, 9}))
                    .values() == V{2, 2, 2, 6, 4322166};
       }},
      {"pair-gcd (2,3) (5760,13824) -> (1152,13824)",
       [] { return reduce_pair_gcd(5760, 13824, 2, 3) == IntegerPair{1152, 13824}; }},
      {"pair-remainder (2,3) (70352,13824) -> (1232,13824)",
       [] { return reduce_pair_remainder(70352, 13824, 2, 3) == IntegerPair{1232, 13824}; }},
      {"pair-gcd (2,3) (p^2,p^3) unchanged",
       [] {
         for (long p : {2, 3, 5}) {
           if (reduce_pair_gcd(p * p, p * p * p, 2, 3) != IntegerPair{p * p, p * p * p}) return false;
         }
         return true;
       }},
  };
}

/// Runs every worked example through every strategy and every reduction
/// check, printing one PASS/FAIL line each. Returns true iff all pass.
inline bool run_selftest(std::ostream& out, std::uint64_t seed = 0) {
  bool all = true;
  for (const auto& item : worked_examples()) {
    std::string detail;
    bool ok = true;
    for (Strategy s : kAllStrategies) {
      Context ctx(seed);
      const Nat d = compute(item.tuple, s, ctx).d;
      if (d != item.expected) {
        ok = false;
        detail += " " + std::string(to_string(s)) + "=" + to_decimal(d);
      }
    }
    out << (ok ? "PASS " : "FAIL ") << "wgcd " << to_string(item.tuple) << " = " << item.expected << detail << '\n';
    all = all && ok;
  }
  for (const auto& check : worked_reductions()) {
    const bool ok = check.holds();
    out << (ok ? "PASS " : "FAIL ") << check.name << '\n';
    all = all && ok;
  }
  return all;
}

}  // namespace wgcd
