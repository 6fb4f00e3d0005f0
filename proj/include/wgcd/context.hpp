#pragma once

#include <algorithm>
#include <cstdint>

#include "wgcd/factor.hpp"
#include "wgcd/kernel.hpp"

namespace wgcd {

/// Instrumentation gathered while computing one wgcd.
struct Counters {
  std::uint64_t factor_calls = 0;
  std::uint64_t max_factored_bits = 0;
  std::uint64_t gcd_calls = 0;

  friend bool operator==(const Counters&, const Counters&) = default;
};

/// Factorization seed plus counters. Strategies route every gcd and factor
/// call through a Context so the auto pipeline's savings are observable.
/// One Context per computation; it is not meant to be shared across threads.
class Context {
 public:
  explicit Context(std::uint64_t seed = 0) : seed_(seed) {}

  [[nodiscard]] std::uint64_t seed() const { return seed_; }
  [[nodiscard]] const Counters& counters() const { return counters_; }
  void reset_counters() { counters_ = {}; }

  Nat gcd(const Integer& a, const Integer& b) {
    ++counters_.gcd_calls;
    return wgcd::gcd(a, b);
  }

  /// gcd of |x_i| over all coordinates (zeros contribute nothing).
  template <class Range>
  Nat gcd_all(const Range& xs) {
    Nat g = 0;
    for (const auto& x : xs) {
      if (g == 1) break;
      g = gcd(g, x);
    }
    return g;
  }

  Factorization factor(const Nat& n) {
    ++counters_.factor_calls;
    counters_.max_factored_bits = std::max(counters_.max_factored_bits, bit_length(n));
    return wgcd::factor(n, seed_);
  }

 private:
  std::uint64_t seed_ = 0;
  Counters counters_;
};

}  // namespace wgcd
