#pragma once

// Tuple rewrites that leave the weighted gcd unchanged.

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "wgcd/context.hpp"
#include "wgcd/kernel.hpp"
#include "wgcd/tuple.hpp"

namespace wgcd {

struct SortedTuple {
  WeightedTuple tuple;
  /// permutation[k] is the original index of position k.
  std::vector<std::size_t> permutation;
};

/// Weights ascending, values permuted in lockstep; ties keep input order.
[[nodiscard]] inline SortedTuple sort_by_weight(const WeightedTuple& t) {
  std::vector<std::size_t> perm(t.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return t.weight(a) < t.weight(b); });
  std::vector<Integer> xs;
  std::vector<Weight> qs;
  for (std::size_t i : perm) {
    xs.push_back(t.value(i));
    qs.push_back(t.weight(i));
  }
  return {WeightedTuple(std::move(xs), WeightVector(std::move(qs))), std::move(perm)};
}

[[nodiscard]] inline WeightedTuple abs_values(const WeightedTuple& t) {
  std::vector<Integer> xs;
  xs.reserve(t.size());
  for (const auto& x : t.values()) xs.push_back(abs(x));
  return WeightedTuple(std::move(xs), t.weights());
}

using IntegerPair = std::pair<Integer, Integer>;

/// Remainder reduction of a pair with q0 < q1 and positive coordinates.
///
///   x0 > x1:  (x0 mod x1, x1)
///   x0 = x1:  (0, x1); the caller finishes with wgcd_single(x1, q1)
///   x0 < x1:  (gcd(x0, x1 mod x0), x1)
///
/// Only multiples of x1 may be subtracted from x0 when q0 <= q1, so for
/// x0 < x1 the bare remainder x1 mod x0 is not admissible in the first slot
/// (weights (1,2): (3,8) has wgcd 1 but (8 mod 3, 8) = (2,8) has wgcd 2).
/// That branch continues the Euclidean chain to gcd(x0, x1) instead, which
/// the weighted value depends on through x0 alone.
[[nodiscard]] inline IntegerPair reduce_pair_remainder(const Integer& x0, const Integer& x1, Weight q0, Weight q1,
                                                      Context& ctx) {
  if (!(q0 < q1)) throw InvalidInput("reduce_pair_remainder: requires q0 < q1");
  if (sgn(x0) <= 0 || sgn(x1) <= 0) throw InvalidInput("reduce_pair_remainder: coordinates must be positive");
  if (x0 > x1) return {Integer(x0 % x1), x1};
  if (x0 == x1) return {Integer(0), x1};
  const Integer beta = x1 % x0;
  return {ctx.gcd(x0, beta), x1};
}

[[nodiscard]] inline IntegerPair reduce_pair_remainder(const Integer& x0, const Integer& x1, Weight q0, Weight q1) {
  Context ctx;
  return reduce_pair_remainder(x0, x1, q0, q1, ctx);
}

/// (gcd(|x0|, |x1|), x1) for q0 < q1.
[[nodiscard]] inline IntegerPair reduce_pair_gcd(const Integer& x0, const Integer& x1, Weight q0, Weight q1) {
  if (!(q0 < q1)) throw InvalidInput("reduce_pair_gcd: requires q0 < q1");
  if (sgn(x0) == 0 && sgn(x1) == 0) throw InvalidInput("reduce_pair_gcd: both coordinates are zero");
  return {gcd(x0, x1), x1};
}

/// (y_0, ..., y_n) with y_n = |x_n| and y_i = gcd(|x_i|, y_{i+1}).
/// Requires nondecreasing weights. The output is a divisor chain:
/// y_i | y_{i+1} whenever y_{i+1} != 0.
[[nodiscard]] inline WeightedTuple reduce_suffix_gcd(const WeightedTuple& t, Context& ctx) {
  if (!t.weights().is_nondecreasing()) throw InvalidInput("reduce_suffix_gcd: weights must be nondecreasing");
  std::vector<Integer> ys(t.size());
  ys.back() = abs(t.values().back());
  for (std::size_t i = t.size() - 1; i-- > 0;) ys[i] = ctx.gcd(t.value(i), ys[i + 1]);
  return WeightedTuple(std::move(ys), t.weights());
}

[[nodiscard]] inline WeightedTuple reduce_suffix_gcd(const WeightedTuple& t) {
  Context ctx;
  return reduce_suffix_gcd(t, ctx);
}

/// x_0 replaced by gcd(|x_0|, ..., |x_n|), other coordinates by |x_i|.
/// Requires nondecreasing weights.
[[nodiscard]] inline WeightedTuple reduce_gcd_prefix(const WeightedTuple& t, Context& ctx) {
  if (!t.weights().is_nondecreasing()) throw InvalidInput("reduce_gcd_prefix: weights must be nondecreasing");
  std::vector<Integer> xs;
  xs.reserve(t.size());
  xs.push_back(ctx.gcd_all(t.values()));
  for (std::size_t i = 1; i < t.size(); ++i) xs.push_back(abs(t.value(i)));
  return WeightedTuple(std::move(xs), t.weights());
}

[[nodiscard]] inline WeightedTuple reduce_gcd_prefix(const WeightedTuple& t) {
  Context ctx;
  return reduce_gcd_prefix(t, ctx);
}

}  // namespace wgcd
