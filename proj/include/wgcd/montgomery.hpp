#pragma once

// Modular arithmetic back ends for the Pollard-rho inner loop.

#include <array>
#include <cstddef>
#include <cstdint>

#include "wgcd/kernel.hpp"

namespace wgcd::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Montgomery multiplication modulo an odd n of at most 64*Limbs bits.
///
/// Residues are kept in Montgomery form and never converted back: rho only
/// needs gcd(residue, n), and R = 2^(64*Limbs) is a unit modulo n.
template <std::size_t Limbs>
class MontgomeryField {
 public:
  using Residue = std::array<u64, Limbs>;

  explicit MontgomeryField(const Nat& modulus) : n_(to_residue_unchecked(modulus)) {
    u64 inv = n_[0];  // n*n == 1 (mod 8) for odd n
    for (int i = 0; i < 5; ++i) inv *= 2 - n_[0] * inv;
    neg_inv_ = ~inv + 1;
  }

  [[nodiscard]] Residue from(const Nat& v) const { return to_residue_unchecked(v); }

  [[nodiscard]] Nat to_nat(const Residue& r) const {
    Nat out;
    mpz_import(out.get_mpz_t(), Limbs, -1, sizeof(u64), 0, 0, r.data());
    return out;
  }

  [[nodiscard]] Residue one() const { return from(Nat(1)); }

  // CIOS product a*b*R^-1 mod n.
  [[nodiscard]] Residue mul(const Residue& a, const Residue& b) const {
    std::array<u64, Limbs + 2> t{};
    for (std::size_t i = 0; i < Limbs; ++i) {
      u64 carry = 0;
      for (std::size_t j = 0; j < Limbs; ++j) {
        const u128 s = static_cast<u128>(a[j]) * b[i] + t[j] + carry;
        t[j] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
      }
      u128 s = static_cast<u128>(t[Limbs]) + carry;
      t[Limbs] = static_cast<u64>(s);
      t[Limbs + 1] = static_cast<u64>(s >> 64);

      const u64 m = t[0] * neg_inv_;
      s = static_cast<u128>(m) * n_[0] + t[0];
      carry = static_cast<u64>(s >> 64);
      for (std::size_t j = 1; j < Limbs; ++j) {
        s = static_cast<u128>(m) * n_[j] + t[j] + carry;
        t[j - 1] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
      }
      s = static_cast<u128>(t[Limbs]) + carry;
      t[Limbs - 1] = static_cast<u64>(s);
      t[Limbs] = t[Limbs + 1] + static_cast<u64>(s >> 64);
    }
    Residue r;
    for (std::size_t j = 0; j < Limbs; ++j) r[j] = t[j];
    if (t[Limbs] != 0 || !less(r, n_)) subtract_in_place(r, n_);
    return r;
  }

  [[nodiscard]] Residue sqr(const Residue& a) const { return mul(a, a); }

  [[nodiscard]] Residue add(const Residue& a, const Residue& b) const {
    Residue r;
    u64 carry = 0;
    for (std::size_t j = 0; j < Limbs; ++j) {
      const u128 s = static_cast<u128>(a[j]) + b[j] + carry;
      r[j] = static_cast<u64>(s);
      carry = static_cast<u64>(s >> 64);
    }
    if (carry != 0 || !less(r, n_)) subtract_in_place(r, n_);
    return r;
  }

  [[nodiscard]] Residue abs_diff(const Residue& a, const Residue& b) const {
    Residue r = less(a, b) ? b : a;
    subtract_in_place(r, less(a, b) ? a : b);
    return r;
  }

  [[nodiscard]] static bool is_zero(const Residue& a) {
    for (u64 limb : a) {
      if (limb != 0) return false;
    }
    return true;
  }

 private:
  static Residue to_residue_unchecked(const Nat& v) {
    Residue r{};
    std::size_t count = 0;
    mpz_export(r.data(), &count, -1, sizeof(u64), 0, 0, v.get_mpz_t());
    return r;
  }

  static bool less(const Residue& a, const Residue& b) {
    for (std::size_t j = Limbs; j-- > 0;) {
      if (a[j] != b[j]) return a[j] < b[j];
    }
    return false;
  }

  static void subtract_in_place(Residue& a, const Residue& b) {
    u64 borrow = 0;
    for (std::size_t j = 0; j < Limbs; ++j) {
      const u64 bj = b[j] + borrow;
      const u64 next_borrow = (bj < borrow) || (a[j] < bj) ? 1 : 0;
      a[j] -= bj;
      borrow = next_borrow;
    }
  }

  Residue n_;
  u64 neg_inv_ = 0;
};

/// Two-limb Montgomery arithmetic for odd n < 2^126 with lazy reduction:
/// residues live in [0, 2n), which is enough for rho since every value is
/// only ever compared through gcd(value, n).
class LazyMontgomery128 {
 public:
  using Residue = u128;

  static bool fits(const Nat& modulus) { return bit_length(modulus) <= 126; }

  explicit LazyMontgomery128(const Nat& modulus) : n_(to_u128(modulus)), two_n_(n_ << 1) {
    const u64 n0 = static_cast<u64>(n_);
    u64 inv = n0;
    for (int i = 0; i < 5; ++i) inv *= 2 - n0 * inv;
    neg_inv_ = ~inv + 1;
  }

  [[nodiscard]] Residue from(const Nat& v) const { return to_u128(Nat(v % from_u128(n_))); }
  [[nodiscard]] Nat to_nat(const Residue& r) const { return from_u128(r); }
  [[nodiscard]] Residue one() const { return 1; }

  [[nodiscard]] Residue mul(const Residue& a, const Residue& b) const {
    const u64 a0 = static_cast<u64>(a), a1 = static_cast<u64>(a >> 64);
    const u64 b0 = static_cast<u64>(b), b1 = static_cast<u64>(b >> 64);
    const u128 p00 = static_cast<u128>(a0) * b0, p01 = static_cast<u128>(a0) * b1;
    const u128 p10 = static_cast<u128>(a1) * b0, p11 = static_cast<u128>(a1) * b1;
    const u128 mid = (p00 >> 64) + static_cast<u64>(p01) + static_cast<u64>(p10);
    return redc(static_cast<u64>(p00), static_cast<u64>(mid), (mid >> 64) + (p01 >> 64) + (p10 >> 64) + p11);
  }

  [[nodiscard]] Residue sqr(const Residue& a) const {
    const u64 a0 = static_cast<u64>(a), a1 = static_cast<u64>(a >> 64);
    const u128 p00 = static_cast<u128>(a0) * a0, p01 = static_cast<u128>(a0) * a1;
    const u128 p11 = static_cast<u128>(a1) * a1;
    const u128 mid = (p00 >> 64) + (static_cast<u128>(static_cast<u64>(p01)) << 1);
    return redc(static_cast<u64>(p00), static_cast<u64>(mid), (mid >> 64) + ((p01 >> 64) << 1) + p11);
  }

  [[nodiscard]] Residue add(const Residue& a, const Residue& b) const {
    const u128 r = a + b;
    return r >= two_n_ ? r - two_n_ : r;
  }

  [[nodiscard]] Residue abs_diff(const Residue& a, const Residue& b) const { return a < b ? b - a : a - b; }

  [[nodiscard]] static bool is_zero(const Residue& a) { return a == 0; }

 private:
  // (hi:t1:t0) * 2^-128 mod n, in [0, 2n).
  [[nodiscard]] u128 redc(u64 t0, u64 t1, u128 hi) const {
    const u64 n0 = static_cast<u64>(n_), n1 = static_cast<u64>(n_ >> 64);
    u64 m = t0 * neg_inv_;
    u128 s = static_cast<u128>(m) * n0 + t0;
    s = static_cast<u128>(m) * n1 + t1 + (s >> 64);
    t1 = static_cast<u64>(s);
    hi += s >> 64;
    m = t1 * neg_inv_;
    s = static_cast<u128>(m) * n0 + t1;
    return hi + static_cast<u128>(m) * n1 + (s >> 64);
  }

  static u128 to_u128(const Nat& v) {
    u64 limbs[2] = {0, 0};
    mpz_export(limbs, nullptr, -1, sizeof(u64), 0, 0, v.get_mpz_t());
    return (static_cast<u128>(limbs[1]) << 64) | limbs[0];
  }
  static Nat from_u128(u128 v) {
    const u64 limbs[2] = {static_cast<u64>(v), static_cast<u64>(v >> 64)};
    Nat out;
    mpz_import(out.get_mpz_t(), 2, -1, sizeof(u64), 0, 0, limbs);
    return out;
  }

  u128 n_;
  u128 two_n_;
  u64 neg_inv_ = 0;
};

/// Plain GMP residues for moduli too wide for the fixed-limb fields.
class GmpField {
 public:
  using Residue = Nat;

  explicit GmpField(const Nat& modulus) : n_(modulus) {}

  [[nodiscard]] Residue from(const Nat& v) const { return v % n_; }
  [[nodiscard]] Nat to_nat(const Residue& r) const { return r; }
  [[nodiscard]] Residue one() const { return 1; }
  [[nodiscard]] Residue mul(const Residue& a, const Residue& b) const { return Nat(a * b) % n_; }
  [[nodiscard]] Residue sqr(const Residue& a) const { return mul(a, a); }
  [[nodiscard]] Residue add(const Residue& a, const Residue& b) const {
    Nat r = a + b;
    if (r >= n_) r -= n_;
    return r;
  }
  [[nodiscard]] Residue abs_diff(const Residue& a, const Residue& b) const { return abs(a - b); }
  [[nodiscard]] static bool is_zero(const Residue& a) { return sgn(a) == 0; }

 private:
  Nat n_;
};

}  // namespace wgcd::detail
