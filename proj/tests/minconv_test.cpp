#include <gtest/gtest.h>

#include <random>

#include "frob/minconv.hpp"
#include "frob/oracle.hpp"

using frob::Instance;
using frob::Value;
using namespace frob::minconv;

namespace {
CostSeq random_cost_seq(std::mt19937_64& rng, std::size_t n, bool zero_head) {
  std::uniform_int_distribution<Cost> d(0, 30);
  CostSeq s(n);
  for (auto& v : s) v = d(rng);
  if (zero_head) s[0] = 0;
  return s;
}

CostSeq naive_mod(const CostSeq& a, const CostSeq& b) {
  CostSeq out(a.size(), kInf);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[(i + j) % a.size()] = std::min(out[(i + j) % a.size()], add(a[i], b[j]));
  return out;
}
}  // namespace

TEST(MinPlus, FrozenExample) {
  const CostSeq a{0, 2, 5}, b{0, 1, 3};
  EXPECT_EQ(min_plus_convolve(a, b), (CostSeq{0, 1, 3, 5, 8}));
  EXPECT_THROW(min_plus_convolve(CostSeq{}, b), frob::InvalidInput);
}

TEST(MinPlus, InfinityAbsorbs) {
  const CostSeq a{0, kInf}, b{kInf, 4};
  EXPECT_EQ(min_plus_convolve(a, b), (CostSeq{kInf, 4, kInf}));
}

TEST(ModConvolution, FrozenExample) {
  const CostSeq a{5, 7, 1};
  EXPECT_EQ(mod_min_convolve(a, a), (CostSeq{8, 2, 6}));
}

TEST(ModConvolution, MatchesNaiveDefinition) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + rng() % 12;
    const auto a = random_cost_seq(rng, n, false), b = random_cost_seq(rng, n, false);
    EXPECT_EQ(mod_min_convolve(a, b), naive_mod(a, b));
  }
}

TEST(Subadditivity, FrozenExamples) {
  const CostSeq plain{0, 1, 1, 3};
  ASSERT_TRUE(is_subadditive(plain));
  EXPECT_EQ(*is_subadditive(plain), (Violation{1, 2}));
  const CostSeq cyc{5, 7, 1};
  ASSERT_TRUE(is_mod_subadditive(cyc));
  EXPECT_EQ(*is_mod_subadditive(cyc), (Violation{2, 2}));
  EXPECT_FALSE(is_subadditive(CostSeq{0, 1, 2, 3}));
  EXPECT_FALSE(is_mod_subadditive(CostSeq{0, 1, 1}));
}

TEST(Subadditivity, ModSubadditiveIffIdempotentWithZeroHead) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 500; ++k) {
    const auto a = random_cost_seq(rng, 1 + rng() % 9, true);
    EXPECT_EQ(!is_mod_subadditive(a).has_value(), mod_min_convolve(a, a) == a);
  }
}

TEST(Subadditivity, UnrollingAndPaddingPreserveViolations) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 500; ++k) {
    const auto a = random_cost_seq(rng, 1 + rng() % 9, rng() % 2 == 0);
    EXPECT_EQ(is_mod_subadditive(a).has_value(), is_subadditive(mod_to_plain_unrolling(a)).has_value());
    EXPECT_EQ(is_subadditive(a).has_value(), is_mod_subadditive(plain_to_mod_padding(a)).has_value());
  }
}

TEST(Closure, FrozenTables) {
  EXPECT_EQ(alltargets_minconv(Instance({3, 5})).table.entries, (std::vector<Value>{0, 10, 5}));
  EXPECT_EQ(alltargets_minconv(Instance({6, 9, 20})).table.frobenius(), 43);
  const auto one = alltargets_minconv(Instance({1, 4}));
  EXPECT_EQ(one.table.frobenius(), -1);
  EXPECT_EQ(one.conv_calls, 0u);
}

TEST(Closure, SeedHasZeroHeadAndDoublings) {
  const auto seed = closure_seed(Instance({5, 7}));
  // 7, 14, 28 reduce to 2, 4, 3 mod 5; 1 is unreached
  EXPECT_EQ(seed, (CostSeq{0, kInf, 7, 28, 14}));
}

TEST(Closure, MatchesOracleWithinBudget) {
  for (std::uint64_t s = 0; s < 150; ++s) {
    const auto inst = frob::random_instance(1 + s % 7, 150, s);
    const auto res = alltargets_minconv(inst);
    EXPECT_EQ(res.table, frob::oracle::oracle_residue_table(inst)) << frob::serialize(inst);
    EXPECT_LE(res.conv_calls, closure_call_budget(inst.smallest()));
  }
}

TEST(Closure, AcceptsCustomConvolution) {
  std::size_t calls = 0;
  const Convolution counting = [&](std::span<const Cost> a, std::span<const Cost> b) {
    ++calls;
    return min_plus_convolve(a, b);
  };
  const auto res = alltargets_minconv(Instance({6, 9, 20}), counting);
  EXPECT_EQ(res.conv_calls, calls);
  EXPECT_EQ(res.table.frobenius(), 43);
}
