#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "wgcd/kernel.hpp"

namespace wgcd {
namespace {

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd(5760, 13824), 1152);
  EXPECT_EQ(gcd(12345, 0), 12345);
  EXPECT_EQ(gcd(0, 0), 0);
  EXPECT_EQ(gcd(70352, 16), testing::gcd_by_scan(70352, 16));
  EXPECT_EQ(gcd(70352, 16), 16);
  EXPECT_EQ(gcd(-12, 18), 6);
}

TEST(Gcd, AgreesWithDivisorScanBelow10k) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 3000; ++i) {
    const std::uint64_t a = rng() % 10000, b = rng() % 10000;
    const Nat g = gcd(Nat(a), Nat(b));
    ASSERT_EQ(g, testing::gcd_by_scan(a, b)) << a << " " << b;
    if (g != 0) {
      EXPECT_EQ(a % g.get_ui(), 0u);
      EXPECT_EQ(b % g.get_ui(), 0u);
    }
  }
}

TEST(GcdMany, Examples) {
  const std::vector<Integer> a{70352, 5760, 13824};
  EXPECT_EQ(gcd_many(a), 16);
  const std::vector<Integer> b{234566, 5789534, 243226, 123456, 4322166};
  EXPECT_EQ(gcd_many(b), 2);
  const std::vector<Integer> c{77};
  EXPECT_EQ(gcd_many(c), 77);
  EXPECT_THROW((void)gcd_many(std::vector<Integer>{}), InvalidInput);
}

TEST(Ipow, Examples) {
  EXPECT_EQ(ipow(2, 9), 512);
  EXPECT_EQ(ipow(24, 1), 24);
  EXPECT_EQ(ipow(0, 0), 1);
  Nat repeated = 1;
  for (int i = 0; i < 3; ++i) repeated *= 5760;
  EXPECT_EQ(repeated, Nat("191102976000"));
  EXPECT_EQ(ipow(5760, 3), repeated);
}

TEST(Iroot, Examples) {
  EXPECT_EQ(iroot(16, 6), 1);
  EXPECT_EQ(iroot(13824, 3), 24);
  EXPECT_EQ(iroot(0, 7), 0);
  EXPECT_EQ(iroot(99, 1), 99);
  EXPECT_THROW((void)iroot(5, 0), InvalidInput);
}

TEST(Iroot, BracketsTheRoot) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 2000; ++i) {
    Nat x = 0;
    const int words = 1 + static_cast<int>(rng() % 5);
    for (int w = 0; w < words; ++w) x = (x << 64) + Nat(std::to_string(rng()));
    x >>= static_cast<mp_bitcnt_t>(rng() % 200);
    if (x == 0) x = 1;
    const std::uint64_t n = 1 + rng() % 12;
    const Nat r = iroot(x, n);
    ASSERT_LE(ipow(r, n), x);
    ASSERT_GT(ipow(r + 1, n), x);
  }
}

TEST(Iroot, ExactPowers) {
  for (unsigned long base : {2ul, 3ul, 10ul, 99991ul}) {
    for (std::uint64_t n = 1; n <= 9; ++n) {
      EXPECT_EQ(iroot(ipow(base, n), n), base);
      EXPECT_EQ(iroot(ipow(base, n) - 1, n), base - 1);
    }
  }
}

TEST(Valuation, Examples) {
  EXPECT_EQ(valuation(2, 13824), 9u);
  EXPECT_EQ(valuation(3, 5760), 2u);
  EXPECT_EQ(valuation(7, 13824), 0u);
  EXPECT_EQ(valuation(2, -64), 6u);
  EXPECT_THROW((void)valuation(2, 0), InvalidInput);
  EXPECT_THROW((void)valuation(1, 10), InvalidInput);
}

TEST(Valuation, IsExact) {
  std::mt19937_64 rng(3);
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 101ul, 65537ul}) {
    for (int i = 0; i < 200; ++i) {
      const Integer x = Integer(std::to_string(1 + rng() % 1000000)) * ipow(p, rng() % 20);
      const std::uint64_t e = valuation(p, x);
      EXPECT_TRUE(mpz_divisible_p(x.get_mpz_t(), ipow(p, e).get_mpz_t()));
      EXPECT_FALSE(mpz_divisible_p(x.get_mpz_t(), ipow(p, e + 1).get_mpz_t()));
    }
  }
}

TEST(BitLength, Basics) {
  EXPECT_EQ(bit_length(0), 0u);
  EXPECT_EQ(bit_length(1), 1u);
  EXPECT_EQ(bit_length(-255), 8u);
  EXPECT_EQ(bit_length(256), 9u);
}

TEST(ParseInteger, AcceptsUnboundedDecimals) {
  EXPECT_EQ(parse_integer("-5760"), -5760);
  EXPECT_EQ(parse_integer("123456789012345678901234567890"), Integer("123456789012345678901234567890"));
  for (const char* bad : {"", "-", "+5", "12a", " 1", "1.5", "0x10"}) {
    EXPECT_THROW((void)parse_integer(bad), InvalidInput) << bad;
  }
}

}  // namespace
}  // namespace wgcd
