#pragma once

// Seeded tuple generators. Known-answer tuples pin the wgcd by
// construction, independent of any strategy.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "wgcd/kernel.hpp"
#include "wgcd/primality.hpp"
#include "wgcd/tuple.hpp"

namespace wgcd {

enum class GenMode { known_answer, random, adversarial_deficient };

[[nodiscard]] constexpr std::string_view to_string(GenMode m) {
  switch (m) {
    case GenMode::known_answer: return "known-answer";
    case GenMode::random: return "random";
    case GenMode::adversarial_deficient: return "adversarial-deficient";
  }
  return "?";
}

[[nodiscard]] inline GenMode parse_gen_mode(std::string_view s) {
  for (GenMode m : {GenMode::known_answer, GenMode::random, GenMode::adversarial_deficient}) {
    if (to_string(m) == s) return m;
  }
  throw InvalidInput("unknown generator mode '" + std::string(s) + "'");
}

struct GenSpec {
  std::uint64_t seed = 0;
  std::size_t n_plus_1 = 2;
  WeightVector weights{2, 3};
  std::uint64_t d_bits = 16;
  std::uint64_t cofactor_bits = 128;
  GenMode mode = GenMode::known_answer;

  void validate() const {
    if (n_plus_1 < 1) throw InvalidInput("gen spec: tuple length must be >= 1");
    if (weights.size() != n_plus_1) throw InvalidInput("gen spec: weights length differs from tuple length");
    if (d_bits < 1 || cofactor_bits < 1) throw InvalidInput("gen spec: bit parameters must be >= 1");
  }

  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

/// Uniform integer with exactly `bits` bits (top bit set).
[[nodiscard]] inline Nat random_bits(std::mt19937_64& rng, std::uint64_t bits) {
  if (bits == 0) return 0;
  const std::size_t words = (bits + 63) / 64;
  std::vector<std::uint64_t> buf(words);
  for (auto& w : buf) w = rng();
  const std::uint64_t spare = words * 64 - bits;
  if (spare != 0) buf.back() >>= spare;
  buf.back() |= std::uint64_t{1} << ((bits - 1) % 64);
  Nat v;
  mpz_import(v.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
  return v;
}

/// Smallest prime >= the `bits`-bit draw (may spill one bit for tiny sizes).
[[nodiscard]] inline Nat random_prime(std::mt19937_64& rng, std::uint64_t bits) {
  Nat p = random_bits(rng, std::max<std::uint64_t>(bits, 2));
  while (!is_prime(p)) ++p;
  return p;
}

/// x_i = d^q_i * c_i.
[[nodiscard]] inline WeightedTuple assemble_known(const Nat& d, const WeightVector& weights,
                                                  const std::vector<Nat>& cofactors) {
  if (cofactors.size() != weights.size()) throw InvalidInput("assemble_known: cofactor count mismatch");
  std::vector<Integer> xs;
  for (std::size_t i = 0; i < weights.size(); ++i) xs.push_back(ipow(d, weights[i]) * cofactors[i]);
  return WeightedTuple(std::move(xs), weights);
}

struct KnownInstance {
  WeightedTuple tuple;
  Nat expected_d;
};

/// A cofactor_bits-bit value coprime to d. Short bit lengths can leave no
/// such value at all, so after a few draws the whole range is scanned.
[[nodiscard]] inline Nat coprime_cofactor(std::mt19937_64& rng, std::uint64_t bits, const Nat& d) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Nat c = random_bits(rng, bits);
    if (gcd(c, d) == 1) return c;
  }
  if (bits > 20) {
    for (;;) {
      Nat c = random_bits(rng, bits);
      if (gcd(c, d) == 1) return c;
    }
  }
  const std::uint64_t lo = std::uint64_t{1} << (bits - 1);
  const std::uint64_t start = rng() % lo;
  for (std::uint64_t k = 0; k < lo; ++k) {
    const Nat c = static_cast<unsigned long>(lo + (start + k) % lo);
    if (gcd(c, d) == 1) return c;
  }
  throw InvalidInput("gen_known: no " + std::to_string(bits) + "-bit cofactor is coprime to d=" + to_decimal(d));
}

/// d of d_bits bits; cofactors of cofactor_bits bits coprime to d, one forced
/// to 1. The unit cofactor makes the cofactor tuple's wgcd 1 and coprimality
/// keeps d's primes out of it, so the wgcd is exactly d.
[[nodiscard]] inline KnownInstance gen_known(const GenSpec& spec) {
  spec.validate();
  if (spec.mode != GenMode::known_answer) throw InvalidInput("gen_known: mode must be known-answer");
  std::mt19937_64 rng(spec.seed);
  const Nat d = random_bits(rng, spec.d_bits);
  std::vector<Nat> cofactors;
  for (std::size_t i = 0; i < spec.n_plus_1; ++i) {
    cofactors.push_back(coprime_cofactor(rng, spec.cofactor_bits, d));
  }
  cofactors[rng() % spec.n_plus_1] = 1;
  return {assemble_known(d, spec.weights, cofactors), d};
}

/// Random nonzero coordinates of cofactor_bits bits with random signs.
[[nodiscard]] inline WeightedTuple gen_random(const GenSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  std::vector<Integer> xs;
  for (std::size_t i = 0; i < spec.n_plus_1; ++i) {
    Integer x = random_bits(rng, spec.cofactor_bits);
    if (rng() & 1) x = -x;
    xs.push_back(std::move(x));
  }
  return WeightedTuple(std::move(xs), spec.weights);
}

/// Multiplies coordinate i by prime^exponents[i].
[[nodiscard]] inline WeightedTuple inject_deficient(const WeightedTuple& t, const Nat& prime,
                                                    const std::vector<std::uint64_t>& exponents) {
  if (exponents.size() != t.size()) throw InvalidInput("inject_deficient: exponent count mismatch");
  std::vector<Integer> xs;
  for (std::size_t i = 0; i < t.size(); ++i) xs.push_back(t.value(i) * ipow(prime, exponents[i]));
  return WeightedTuple(std::move(xs), t.weights());
}

/// Prime-power-heavy tuples whose gcd is inflated by deficient primes.
///
/// Base: small primes p with exponent q_i * a_p + r (0 <= r < q_i) in
/// coordinate i, so the wgcd is prod p^a_p of about d_bits bits while the
/// excess r shows up in the gcd. Noise: one prime s of cofactor_bits bits
/// dividing every coordinate, with exponent below q_i in the heaviest-weight
/// coordinate so s never reaches the wgcd, and independent cofactor_bits-bit
/// multipliers on all coordinates but one.
[[nodiscard]] inline WeightedTuple gen_adversarial(const GenSpec& spec) {
  spec.validate();
  if (spec.mode != GenMode::adversarial_deficient) throw InvalidInput("gen_adversarial: wrong mode");
  std::mt19937_64 rng(spec.seed);
  const auto& table = small_primes();
  const std::size_t n = spec.n_plus_1;

  std::vector<Integer> xs(n, Integer(1));
  Nat wgcd_part = 1;
  while (bit_length(wgcd_part) < spec.d_bits) {
    const Nat p = table[rng() % 25];  // primes below 100
    const std::uint64_t a = 1 + rng() % 2;
    wgcd_part *= ipow(p, a);
    for (std::size_t i = 0; i < n; ++i) xs[i] *= ipow(p, spec.weights[i] * a + rng() % spec.weights[i]);
  }
  WeightedTuple t(std::move(xs), spec.weights);

  std::size_t heaviest = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (spec.weights[i] > spec.weights[heaviest]) heaviest = i;
  }
  const Nat s = random_prime(rng, spec.cofactor_bits);
  std::vector<std::uint64_t> exps(n);
  for (std::size_t i = 0; i < n; ++i) exps[i] = 1 + rng() % (2 * spec.weights[i]);
  // Deficient where possible; with unit weight only absence keeps s out.
  exps[heaviest] = spec.weights[heaviest] - 1;
  t = inject_deficient(t, s, exps);

  const std::size_t unit = rng() % n;
  std::vector<Integer> noisy = t.values();
  for (std::size_t i = 0; i < n; ++i) {
    if (i != unit) noisy[i] *= random_bits(rng, spec.cofactor_bits);
  }
  return WeightedTuple(std::move(noisy), spec.weights);
}

}  // namespace wgcd
