#pragma once

// Each characterization of the weighted gcd as an independent strategy.
// All of them agree; the test suite checks that against the brute-force
// definition.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wgcd/context.hpp"
#include "wgcd/factor.hpp"
#include "wgcd/kernel.hpp"
#include "wgcd/tuple.hpp"

namespace wgcd {

/// The brute-force scan gave up before reaching an answer.
class ScanLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kUnlimitedScan = std::numeric_limits<std::uint64_t>::max();

namespace detail {

// base^exp, or nullopt once it exceeds limit.
inline std::optional<std::uint64_t> bounded_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return std::nullopt;
    r *= base;
  }
  return r;
}

inline void count_candidate(std::uint64_t& scanned, std::uint64_t max_candidates) {
  if (++scanned > max_candidates) {
    throw ScanLimitExceeded("brute force: more than " + std::to_string(max_candidates) + " candidates");
  }
}

}  // namespace detail

/// The definition itself: the largest d >= 1 with d^q_i | x_i for all i,
/// found by scanning d downward from min over nonzero x_i of iroot(|x_i|, q_i).
/// Zero coordinates impose no constraint.
[[nodiscard]] inline Nat wgcd_bruteforce(const WeightedTuple& t, std::uint64_t max_candidates = kUnlimitedScan) {
  std::optional<Nat> upper;
  bool fits_word = true;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (sgn(t.value(i)) == 0) continue;
    const Nat x = abs(t.value(i));
    fits_word = fits_word && bit_length(x) <= 64;
    Nat r = iroot(x, t.weight(i));
    if (!upper || r < *upper) upper = std::move(r);
  }

  std::uint64_t scanned = 0;
  if (fits_word) {
    std::vector<std::pair<std::uint64_t, Weight>> coords;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (sgn(t.value(i)) != 0) coords.emplace_back(mpz_get_ui(Nat(abs(t.value(i))).get_mpz_t()), t.weight(i));
    }
    for (std::uint64_t d = mpz_get_ui(upper->get_mpz_t()); d >= 1; --d) {
      detail::count_candidate(scanned, max_candidates);
      const bool divides_all = std::all_of(coords.begin(), coords.end(), [d](const auto& c) {
        const auto power = detail::bounded_pow(d, c.second, c.first);
        return power && c.first % *power == 0;
      });
      if (divides_all) return d;
    }
    return 1;
  }

  for (Nat d = *upper; d >= 1; --d) {
    detail::count_candidate(scanned, max_candidates);
    bool divides_all = true;
    for (std::size_t i = 0; i < t.size() && divides_all; ++i) {
      divides_all = mpz_divisible_p(t.value(i).get_mpz_t(), ipow(d, t.weight(i)).get_mpz_t()) != 0;
    }
    if (divides_all) return d;
  }
  return 1;
}

/// Largest d with d^q | x, from the factorization of |x|.
[[nodiscard]] inline Nat wgcd_single(const Integer& x, Weight q, Context& ctx) {
  if (sgn(x) == 0) throw InvalidInput("wgcd_single: x must be nonzero");
  if (q < 1) throw InvalidInput("wgcd_single: weight must be >= 1");
  Nat d = 1;
  for (const auto& [p, e] : ctx.factor(abs(x))) d *= ipow(p, e / q);
  return d;
}

[[nodiscard]] inline Nat wgcd_single(const Integer& x, Weight q) {
  Context ctx;
  return wgcd_single(x, q, ctx);
}

/// Product formula over full factorizations of every nonzero coordinate:
/// exponent of p is min_i floor(v_p(x_i) / q_i).
[[nodiscard]] inline Nat wgcd_full_factorization(const WeightedTuple& t, Context& ctx) {
  std::vector<std::pair<Factorization, Weight>> factored;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (sgn(t.value(i)) != 0) factored.emplace_back(ctx.factor(abs(t.value(i))), t.weight(i));
  }
  std::map<Nat, std::uint64_t> exponent;
  for (const auto& [f, q] : factored) {
    for (const auto& entry : f) exponent.try_emplace(entry.prime, std::numeric_limits<std::uint64_t>::max());
  }
  for (auto& [p, e] : exponent) {
    for (const auto& [f, q] : factored) e = std::min<std::uint64_t>(e, f.exponent_of(p) / q);
  }
  Nat d = 1;
  for (const auto& [p, e] : exponent) d *= ipow(p, e);
  return d;
}

/// Factors only g = gcd(|x_i|): d^q_i | x_i with q_i >= 1 forces d | g, so
/// the primes of g are the only candidates.
[[nodiscard]] inline Nat wgcd_gcd_factorization(const WeightedTuple& t, Context& ctx) {
  const Nat g = ctx.gcd_all(t.values());
  if (g == 1) return 1;
  Nat d = 1;
  for (const auto& [p, s] : ctx.factor(g)) {
    std::uint64_t e = s;
    for (std::size_t i = 0; i < t.size() && e > 0; ++i) {
      if (sgn(t.value(i)) == 0) continue;
      e = std::min<std::uint64_t>(e, valuation(p, t.value(i)) / t.weight(i));
    }
    d *= ipow(p, e);
  }
  return d;
}

/// With m = lcm(q_i) and G = gcd(|x_i|^(m/q_i)), the largest d with d^m | G.
/// (G itself need not be an m-th power; floor(min_i(m a_i / q_i) / m) equals
/// min_i floor(a_i / q_i), so this matches the product formula.)
[[nodiscard]] inline Nat wgcd_lcm_power(const WeightedTuple& t, Context& ctx) {
  const std::uint64_t m = t.weights().lcm();
  Nat big_g = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (sgn(t.value(i)) == 0) continue;
    big_g = ctx.gcd(big_g, ipow(abs(t.value(i)), m / t.weight(i)));
  }
  Nat d = 1;
  for (const auto& [p, e] : ctx.factor(big_g)) d *= ipow(p, e / m);
  return d;
}

/// wgcd of the pair (d_acc, x) under weights (1, q):
/// prod over p | d_acc of p^min(v_p(d_acc), floor(v_p(x) / q)). x = 0 keeps d_acc.
[[nodiscard]] inline Nat fold_merge(const Nat& d_acc, const Integer& x, Weight q, Context& ctx) {
  if (d_acc < 1) throw InvalidInput("fold_merge: accumulator must be >= 1");
  if (sgn(x) == 0 || d_acc == 1) return d_acc;
  Nat d = 1;
  for (const auto& [p, e] : ctx.factor(d_acc)) d *= ipow(p, std::min<std::uint64_t>(e, valuation(p, x) / q));
  return d;
}

[[nodiscard]] inline Nat fold_merge(const Nat& d_acc, const Integer& x, Weight q) {
  Context ctx;
  return fold_merge(d_acc, x, q, ctx);
}

/// Repeated pairwise merging. The accumulator starts from the coordinate with
/// the smallest bit-length / weight, the only full factorization performed.
[[nodiscard]] inline Nat wgcd_fold(const WeightedTuple& t, Context& ctx) {
  std::optional<std::size_t> start;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (sgn(t.value(i)) == 0) continue;
    // bits_i / q_i < bits_s / q_s, cross-multiplied
    if (!start || bit_length(t.value(i)) * t.weight(*start) < bit_length(t.value(*start)) * t.weight(i)) start = i;
  }
  Nat d = wgcd_single(t.value(*start), t.weight(*start), ctx);
  for (std::size_t i = 0; i < t.size() && d > 1; ++i) {
    if (i != *start) d = fold_merge(d, t.value(i), t.weight(i), ctx);
  }
  return d;
}

[[nodiscard]] inline Nat wgcd_full_factorization(const WeightedTuple& t) {
  Context ctx;
  return wgcd_full_factorization(t, ctx);
}

[[nodiscard]] inline Nat wgcd_gcd_factorization(const WeightedTuple& t) {
  Context ctx;
  return wgcd_gcd_factorization(t, ctx);
}

[[nodiscard]] inline Nat wgcd_lcm_power(const WeightedTuple& t) {
  Context ctx;
  return wgcd_lcm_power(t, ctx);
}

[[nodiscard]] inline Nat wgcd_fold(const WeightedTuple& t) {
  Context ctx;
  return wgcd_fold(t, ctx);
}

}  // namespace wgcd
