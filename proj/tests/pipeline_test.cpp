#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "test_support.hpp"
#include "wgcd/pipeline.hpp"

namespace wgcd {
namespace {

using V = std::vector<Integer>;

TEST(Auto, Examples) {
  EXPECT_EQ(wgcd_auto(WeightedTuple({123456, 243226, 5789534, 234566, 4322166}, {7, 5, 3, 2, 9})).d, 1);
  EXPECT_EQ(wgcd_auto(WeightedTuple({1232, 2304, 13824}, {2, 2, 3})).d, 4);
  EXPECT_EQ(wgcd_auto(WeightedTuple({70352, 5760, 13824}, {2, 2, 3})).d, 4);
  EXPECT_EQ(wgcd_auto(WeightedTuple({-77}, {1})).d, 77);
  EXPECT_EQ(wgcd_auto(WeightedTuple({5760, 13824}, {2, 3})).d, 24);
  EXPECT_EQ(wgcd_auto(WeightedTuple({8, 4}, {2, 3})).d, 1);
}

TEST(Auto, TraceOfFiveTuple) {
  const WgcdResult r = wgcd_auto(WeightedTuple({123456, 243226, 5789534, 234566, 4322166}, {7, 5, 3, 2, 9}));
  ASSERT_GE(r.trace.steps.size(), 3u);
  EXPECT_EQ(r.trace.steps[1].rule, Rule::permute);
  EXPECT_EQ(r.trace.steps[1].tuple.values(), (V{234566, 5789534, 243226, 123456, 4322166}));
  EXPECT_EQ(r.trace.steps[2].rule, Rule::suffix_gcd);
  EXPECT_EQ(r.trace.steps[2].tuple.values(), (V{2, 2, 2, 6, 4322166}));
}

TEST(Auto, PairRemainderIdlesAfterSuffixGcd) {
  // suffix-gcd leaves y0 | y1, so the remainder step makes no progress
  const WgcdResult r = wgcd_auto(WeightedTuple({70352, 13824}, {2, 3}));
  EXPECT_EQ(r.d, 4);
  EXPECT_EQ(r.trace.steps.back().rule, Rule::suffix_gcd);
  EXPECT_EQ(r.trace.steps.back().tuple.values(), (V{16, 13824}));
  EXPECT_EQ(reduce_pair_remainder(16, 13824, 2, 3), (IntegerPair{16, 13824}));
}

TEST(Auto, FastPaths) {
  const WgcdResult one = wgcd_auto(WeightedTuple({1, 13824}, {2, 3}));
  EXPECT_EQ(one.d, 1);
  EXPECT_EQ(one.trace.steps.back().rule, Rule::fastpath_one);
  EXPECT_EQ(one.counters.factor_calls, 0u);
  const WgcdResult eq = wgcd_auto(WeightedTuple({13824, 27648}, {3, 3}));
  EXPECT_EQ(eq.d, 24);
  EXPECT_EQ(eq.trace.steps.back().rule, Rule::fastpath_equal_weights);
}

TEST(Auto, TraceReplays) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 1000; ++i) {
    const WeightedTuple t = testing::random_tuple(rng);
    const WgcdResult r = wgcd_auto(t);
    WeightedTuple prev = t;
    for (const auto& step : r.trace.steps) {
      ASSERT_EQ(replay_step(step.rule, prev), step.tuple) << to_string(t) << " at " << to_string(step.rule);
      prev = step.tuple;
    }
  }
}

TEST(Auto, AgreesWithScanAndVerifies) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 3000; ++i) {
    const WeightedTuple t = testing::random_tuple(rng, 4);
    const WgcdResult r = wgcd_auto(t);
    ASSERT_EQ(r.d, testing::wgcd_by_scan(t)) << to_string(t);
    for (std::size_t k = 0; k < t.size(); ++k) {
      ASSERT_TRUE(mpz_divisible_p(t.value(k).get_mpz_t(), ipow(r.d, t.weight(k)).get_mpz_t()));
    }
    ASSERT_TRUE(verify_wgcd(t, r.d).ok) << to_string(t);
  }
}

TEST(Auto, NeverFactorsMoreThanTheReducedGcd) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 2000; ++i) {
    const WeightedTuple t = testing::random_tuple(rng);
    const WgcdResult r = wgcd_auto(t);
    const WeightedTuple& reduced = r.trace.steps.back().tuple;
    Nat g = 0;
    for (const auto& x : reduced.values()) g = gcd(g, x);
    ASSERT_LE(r.counters.max_factored_bits, bit_length(g)) << to_string(t);
    const WeightedTuple& suffix = r.trace.steps[2].tuple;
    ASSERT_LE(r.counters.max_factored_bits, bit_length(suffix.value(0)));
  }
}

TEST(Auto, AllOnesWeightsIsPlainGcd) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<Integer> xs;
    std::uint64_t g = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t v = rng() % 1000000;
      g = testing::gcd_by_scan(g, v);
      xs.emplace_back(static_cast<unsigned long>(v));
    }
    if (g == 0) continue;
    EXPECT_EQ(wgcd_auto(WeightedTuple(xs, WeightVector(std::vector<Weight>(n, 1)))).d, g);
  }
}

TEST(Auto, PermutationInvariance) {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 1000; ++i) {
    const WeightedTuple t = testing::random_tuple(rng);
    std::vector<std::size_t> perm(t.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Integer> xs;
    std::vector<Weight> qs;
    for (std::size_t k : perm) {
      xs.push_back(t.value(k));
      qs.push_back(t.weight(k));
    }
    ASSERT_EQ(wgcd_auto(WeightedTuple(xs, WeightVector(qs))).d, wgcd_auto(t).d) << to_string(t);
  }
}

TEST(ScalarAction, WgcdScalesLinearly) {
  std::mt19937_64 rng(46);
  for (int i = 0; i < 300; ++i) {
    const WeightedTuple t = testing::random_tuple(rng);
    const std::uint64_t d = testing::wgcd_by_scan(t);
    for (unsigned long lambda = 1; lambda <= 20; ++lambda) {
      std::vector<Integer> xs;
      for (std::size_t k = 0; k < t.size(); ++k) {
        Integer v = t.value(k);
        for (Weight e = 0; e < t.weight(k); ++e) v *= lambda;
        xs.push_back(v);
      }
      const WeightedTuple scaled(xs, t.weights());
      ASSERT_EQ(scale(t, lambda), scaled);
      ASSERT_EQ(wgcd_auto(scaled).d, Nat(lambda * d)) << to_string(t) << " lambda=" << lambda;
    }
  }
}

TEST(Normalize, Examples) {
  const Normalized n = normalize(WeightedTuple({5760, 13824}, {2, 3}));
  EXPECT_EQ(n.d, 24);
  EXPECT_EQ(n.tuple.values(), (V{10, 1}));
  const Normalized neg = normalize(WeightedTuple({-5760, 13824}, {2, 3}));
  EXPECT_EQ(neg.tuple.values(), (V{-10, 1}));
  const Normalized same = normalize(WeightedTuple({10, 1}, {2, 3}));
  EXPECT_EQ(same.d, 1);
  EXPECT_EQ(same.tuple.values(), (V{10, 1}));
}

TEST(Normalize, StripsScalar) {
  // a = (6, 10, 15) has wgcd 1 under any weights; 7 * a = (7^2*6, 7^3*10, 7*15)
  const WeightedTuple t({49 * 6, 343 * 10, 7 * 15}, {2, 3, 1});
  const Normalized n = normalize(t);
  EXPECT_EQ(n.d, 7);
  EXPECT_EQ(n.tuple.values(), (V{6, 10, 15}));
}

TEST(Normalize, ResultHasWgcdOneAndIsIdempotent) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 1000; ++i) {
    const WeightedTuple t = testing::random_tuple(rng);
    const Normalized n = normalize(t);
    ASSERT_EQ(testing::wgcd_by_scan(n.tuple), 1u) << to_string(t);
    const Normalized again = normalize(n.tuple);
    ASSERT_EQ(again.d, 1);
    ASSERT_EQ(again.tuple, n.tuple);
    ASSERT_EQ(scale(n.tuple, n.d), t);
  }
}

TEST(Verify, Examples) {
  const WeightedTuple t({70352, 5760, 13824}, {2, 2, 3});
  EXPECT_TRUE(verify_wgcd(t, 4).ok);
  EXPECT_EQ(verify_wgcd(t, 2).reason, VerifyFailure::maximality);
  EXPECT_EQ(verify_wgcd(t, 8).reason, VerifyFailure::divisibility);
  EXPECT_FALSE(verify_wgcd(t, 8).ok);
  EXPECT_THROW((void)verify_wgcd(t, 0), InvalidInput);
}

TEST(Verify, RejectsEveryOtherCandidate) {
  std::mt19937_64 rng(48);
  for (int i = 0; i < 300; ++i) {
    const WeightedTuple t = testing::random_tuple(rng, 3, 100000);
    const std::uint64_t d = testing::wgcd_by_scan(t);
    for (std::uint64_t c = 1; c <= 64; ++c) ASSERT_EQ(verify_wgcd(t, Nat(c)).ok, c == d) << to_string(t) << " " << c;
  }
}

TEST(Compute, StrategyTokensRoundTrip) {
  for (Strategy s : kAllStrategies) EXPECT_EQ(parse_strategy(to_string(s)), s);
  EXPECT_THROW((void)parse_strategy("euclid"), InvalidInput);
}

TEST(Compute, AllStrategiesAgree) {
  std::mt19937_64 rng(49);
  for (int i = 0; i < 1000; ++i) {
    const WeightedTuple t = testing::random_tuple(rng, 4);
    const Nat expected = testing::wgcd_by_scan(t);
    for (Strategy s : kAllStrategies) {
      const WgcdResult r = compute(t, s);
      ASSERT_EQ(r.d, expected) << to_string(s) << " " << to_string(t);
      ASSERT_EQ(r.strategy, to_string(s));
    }
  }
}

}  // namespace
}  // namespace wgcd
