#pragma once

// Integer factorization: trial division, then Miller-Rabin, then
// Pollard-rho with Brent cycle detection on the remaining cofactors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "wgcd/kernel.hpp"
#include "wgcd/montgomery.hpp"
#include "wgcd/primality.hpp"

namespace wgcd {

struct PrimePower {
  Nat prime;
  std::uint64_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, ascending by prime. Empty represents 1.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> entries) : entries_(std::move(entries)) {}

  [[nodiscard]] const std::vector<PrimePower>& entries() const { return entries_; }
  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] auto begin() const { return entries_.begin(); }
  [[nodiscard]] auto end() const { return entries_.end(); }

  /// Exponent of p; 0 when p does not occur.
  [[nodiscard]] std::uint64_t exponent_of(const Nat& p) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                               [](const PrimePower& e, const Nat& v) { return e.prime < v; });
    return (it != entries_.end() && it->prime == p) ? it->exponent : 0;
  }

  [[nodiscard]] Nat product() const {
    Nat r = 1;
    for (const auto& [p, e] : entries_) r *= ipow(p, e);
    return r;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> entries_;
};

namespace detail {

// Brent's variant of Pollard rho on x -> x^2 + c. Returns a nontrivial
// divisor of the odd composite, non-prime-power n.
template <class Field>
Nat brent_rho(const Nat& n, std::mt19937_64& rng) {
  const Field field(n);
  constexpr std::uint64_t kBatch = 128;
  const Nat hi = n - 1;
  for (;;) {
    const auto c = field.from(random_between(rng, 1, hi));
    auto y = field.from(random_between(rng, 1, hi));
    auto q = field.one();
    auto x = y;
    auto ys = y;
    Nat g = 1;
    for (std::uint64_t r = 1; g == 1; r *= 2) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = field.add(field.sqr(y), c);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const std::uint64_t steps = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = field.add(field.sqr(y), c);
          q = field.mul(q, field.abs_diff(x, y));
        }
        g = gcd(field.to_nat(q), n);
      }
    }
    if (g == n) {
      // The batch overshot; replay it one step at a time.
      do {
        ys = field.add(field.sqr(ys), c);
        g = gcd(field.to_nat(field.abs_diff(x, ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline Nat find_divisor(const Nat& n, std::mt19937_64& rng) {
  if (bit_length(n) > 64 && LazyMontgomery128::fits(n)) return brent_rho<LazyMontgomery128>(n, rng);
  switch ((bit_length(n) + 63) / 64) {
    case 1: return brent_rho<MontgomeryField<1>>(n, rng);
    case 2: return brent_rho<MontgomeryField<2>>(n, rng);
    case 3: return brent_rho<MontgomeryField<3>>(n, rng);
    case 4: return brent_rho<MontgomeryField<4>>(n, rng);
    default: return brent_rho<GmpField>(n, rng);
  }
}

// If n = r^k for some k >= 2, returns (r, k) with k maximal for the
// smallest prime power found; otherwise (n, 1).
inline std::pair<Nat, std::uint64_t> perfect_power(const Nat& n) {
  const std::uint64_t bits = bit_length(n);
  for (std::uint32_t k : small_primes()) {
    if (k >= bits) break;
    Nat r = iroot(n, k);
    if (ipow(r, k) == n) return {std::move(r), k};
  }
  return {n, 1};
}

}  // namespace detail

/// Factors n >= 1. Deterministic given (n, seed).
[[nodiscard]] inline Factorization factor(const Nat& n, std::uint64_t seed = 0) {
  if (n < 1) throw InvalidInput("factor: n must be >= 1");
  std::map<Nat, std::uint64_t> found;
  Nat rest = n;
  bool rest_is_prime = false;
  for (std::uint32_t p : small_primes()) {
    if (Nat(Nat(p) * p) > rest) {
      rest_is_prime = rest > 1;
      break;
    }
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      std::uint64_t e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      }
      found[Nat(p)] += e;
    }
  }

  if (rest_is_prime) {
    found[rest] += 1;
  } else if (rest > 1) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Nat, std::uint64_t>> work{{rest, 1}};
    while (!work.empty()) {
      auto [m, mult] = std::move(work.back());
      work.pop_back();
      if (is_prime(m, seed)) {
        found[m] += mult;
        continue;
      }
      auto [root, k] = detail::perfect_power(m);
      if (k > 1) {
        work.emplace_back(std::move(root), mult * k);
        continue;
      }
      Nat d = detail::find_divisor(m, rng);
      Nat cofactor = m / d;
      work.emplace_back(std::move(d), mult);
      work.emplace_back(std::move(cofactor), mult);
    }
  }

  std::vector<PrimePower> entries;
  entries.reserve(found.size());
  for (auto& [p, e] : found) entries.push_back({p, e});
  return Factorization(std::move(entries));
}

}  // namespace wgcd
