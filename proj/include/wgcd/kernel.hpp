#pragma once

// Arbitrary-precision integer primitives shared by every wgcd strategy.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wgcd {

/// Signed arbitrary-precision integer (tuple coordinates).
using Integer = mpz_class;
/// Nonnegative arbitrary-precision integer. Same representation as Integer;
/// the sign invariant is maintained by the functions that produce it.
using Nat = mpz_class;

/// Thrown for inputs that violate a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Number of significant bits; 0 for zero.
[[nodiscard]] inline std::uint64_t bit_length(const Integer& x) {
  if (sgn(x) == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

[[nodiscard]] inline Nat abs_value(const Integer& x) { return abs(x); }

/// gcd(0, 0) = 0 and gcd(a, 0) = |a|.
[[nodiscard]] inline Nat gcd(const Integer& a, const Integer& b) {
  Nat r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Left fold of gcd over a nonempty list.
[[nodiscard]] inline Nat gcd_many(std::span<const Integer> xs) {
  if (xs.empty()) throw InvalidInput("gcd_many: empty list");
  Nat g = abs(xs.front());
  for (const auto& x : xs.subspan(1)) {
    if (g == 1) break;
    g = gcd(g, x);
  }
  return g;
}

/// Exact power. 0^0 is taken to be 1.
[[nodiscard]] inline Nat ipow(const Integer& base, std::uint64_t exp) {
  Nat r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

/// Floor n-th root: r with r^n <= x < (r+1)^n.
///
/// Newton iteration started above the root (from the bit length of x). The
/// iterates decrease monotonically to the floor root, so the loop stops on
/// the first non-decreasing step; the final bracket is then checked.
[[nodiscard]] inline Nat iroot(const Nat& x, std::uint64_t n) {
  if (n == 0) throw InvalidInput("iroot: degree must be positive");
  if (sgn(x) < 0) throw InvalidInput("iroot: negative radicand");
  if (sgn(x) == 0 || n == 1) return x;
  const std::uint64_t bits = bit_length(x);
  if (n >= bits) return 1;  // 1 <= x < 2^bits <= 2^n

  Nat r = 1;
  r <<= static_cast<mp_bitcnt_t>((bits + n - 1) / n);
  const Nat degree = static_cast<unsigned long>(n);
  const Nat degree_minus_one = static_cast<unsigned long>(n - 1);
  for (;;) {
    Nat next = (degree_minus_one * r + x / ipow(r, n - 1)) / degree;
    if (next >= r) break;
    r = std::move(next);
  }
  while (ipow(r, n) > x) --r;
  while (ipow(r + 1, n) <= x) ++r;
  return r;
}

/// Largest e with p^e | x. Rejects x = 0 (the valuation is infinite there).
[[nodiscard]] inline std::uint64_t valuation(const Nat& p, const Integer& x) {
  if (p < 2) throw InvalidInput("valuation: p must be >= 2");
  if (sgn(x) == 0) throw InvalidInput("valuation: x must be nonzero");
  Nat rest;
  return mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
}

/// Parses an optionally negative decimal integer of unbounded length.
[[nodiscard]] inline Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw InvalidInput("not an integer: '" + std::string(text) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw InvalidInput("not an integer: '" + std::string(text) + "'");
  }
  return Integer(std::string(text), 10);
}

[[nodiscard]] inline std::string to_decimal(const Integer& x) { return x.get_str(10); }

}  // namespace wgcd
