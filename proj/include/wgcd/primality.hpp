#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wgcd/kernel.hpp"

namespace wgcd {

/// Trial-division bound; every prime below it is in small_primes().
inline constexpr std::uint32_t kTrialDivisionBound = 10000;

/// Primes below kTrialDivisionBound, ascending (sieve of Eratosthenes).
[[nodiscard]] inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionBound, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < kTrialDivisionBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j < kTrialDivisionBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

namespace detail {

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod64(result, base, m);
    base = mulmod64(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Strong probable-prime test of odd n > 2 to base a.
inline bool strong_probable_prime64(std::uint64_t n, std::uint64_t a) {
  a %= n;
  if (a == 0) return true;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

inline bool strong_probable_prime(const Nat& n, const Nat& a) {
  Nat d = n - 1;
  const std::uint64_t s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= static_cast<mp_bitcnt_t>(s);
  const Nat n_minus_one = n - 1;
  Nat x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_one) return true;
  for (std::uint64_t r = 1; r < s; ++r) {
    x = Nat(x * x) % n;
    if (x == n_minus_one) return true;
  }
  return false;
}

// Uniform-ish draw in [lo, hi] from raw generator words (hi - lo small
// relative to the word count, so the modulo bias is negligible).
inline Nat random_between(std::mt19937_64& rng, const Nat& lo, const Nat& hi) {
  const Nat span = hi - lo + 1;
  const std::size_t words = (bit_length(span) + 63) / 64 + 1;
  std::vector<std::uint64_t> buf(words);
  for (auto& w : buf) w = rng();
  Nat v;
  mpz_import(v.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
  return lo + v % span;
}

}  // namespace detail

/// Miller-Rabin primality test.
///
/// Exact below 2^64 (the first twelve primes are a complete witness set
/// there). Above, 40 rounds with witnesses drawn from a generator seeded by
/// `seed`, giving error below 4^-40.
[[nodiscard]] inline bool is_prime(const Nat& n, std::uint64_t seed = 0) {
  if (n < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < 37 * 37) return true;

  if (bit_length(n) <= 64) {
    const std::uint64_t m = mpz_get_ui(n.get_mpz_t());
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
      if (!detail::strong_probable_prime64(m, a)) return false;
    }
    return true;
  }

  if (!detail::strong_probable_prime(n, 2)) return false;
  std::mt19937_64 rng(seed);
  const Nat hi = n - 2;
  for (int round = 0; round < 40; ++round) {
    if (!detail::strong_probable_prime(n, detail::random_between(rng, 2, hi))) return false;
  }
  return true;
}

}  // namespace wgcd
