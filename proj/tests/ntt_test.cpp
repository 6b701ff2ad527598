#include <gtest/gtest.h>

#include <random>

#include "frob/ntt.hpp"

using namespace frob::ntt;

namespace {
std::vector<std::uint8_t> random_bits(std::mt19937_64& rng, std::size_t n, unsigned density) {
  std::vector<std::uint8_t> v(n);
  for (auto& b : v) b = rng() % 100 < density;
  return v;
}
}  // namespace

TEST(Fields, RoundTripAndArithmetic) {
  for (std::uint64_t x : {0ull, 1ull, 2ull, 12345ull, 998244352ull}) EXPECT_EQ(Mod998::to(Mod998::from(x)), x);
  EXPECT_EQ(Mod998::to(Mod998::mul(Mod998::from(998244352), Mod998::from(998244352))), 1u);
  const auto g = Goldilocks::kMod;
  EXPECT_EQ(Goldilocks::mul(g - 1, g - 1), 1u);
  EXPECT_EQ(Goldilocks::add(g - 1, g - 1), g - 2);
  EXPECT_EQ(Goldilocks::sub(0, 1), g - 1);
  // 2^64 = 2^32 - 1 (mod p)
  EXPECT_EQ(Goldilocks::mul(1ull << 32, 1ull << 32), 0xFFFFFFFFull);
}

TEST(Fields, RootsHaveFullOrder) {
  EXPECT_NE(Mod998::to(power<Mod998>(Mod998::from(3), (Mod998::kMod - 1) / 2)), 1u);
  EXPECT_NE(power<Goldilocks>(7, (Goldilocks::kMod - 1) / 2), 1u);
}

template <typename F>
void check_against_direct(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 20; ++k) {
    const auto x = random_bits(rng, 1 + rng() % 3000, 1 + rng() % 60);
    const auto y = random_bits(rng, 1 + rng() % 3000, 1 + rng() % 60);
    EXPECT_EQ(boolean_convolve_ntt<F>(x, y), boolean_convolve_direct(x, y));
  }
}

TEST(BooleanConvolution, Mod998MatchesDirect) { check_against_direct<Mod998>(1); }
TEST(BooleanConvolution, GoldilocksMatchesDirect) { check_against_direct<Goldilocks>(2); }

TEST(BooleanConvolution, DispatchMatchesDirect) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 10; ++k) {
    const auto x = random_bits(rng, 500 + rng() % 5000, 30);
    const auto y = random_bits(rng, 500 + rng() % 5000, 30);
    EXPECT_EQ(boolean_convolve(x, y), boolean_convolve_direct(x, y));
  }
}

TEST(BooleanConvolution, DenseInputsDoNotCancel) {
  // all-ones inputs push coefficients to their maximum
  const std::vector<std::uint8_t> ones(4000, 1);
  const auto out = boolean_convolve(ones, ones);
  ASSERT_EQ(out.size(), 7999u);
  for (auto b : out) EXPECT_EQ(b, 1);
}

TEST(Helpers, PowersOfTwo) {
  EXPECT_EQ(ceil_pow2(1), 1u);
  EXPECT_EQ(ceil_pow2(5), 8u);
  EXPECT_EQ(ceil_pow2(1024), 1024u);
  EXPECT_EQ(log2_exact(1024), 10);
  EXPECT_TRUE(fits_mod998(1u << 23));
  EXPECT_FALSE(fits_mod998((1u << 23) + 1));
}
