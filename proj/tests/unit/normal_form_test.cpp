#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "braid2d/normal_form.hpp"
#include "test_support.hpp"

namespace braid2d {
namespace {

using testing::artin_equal;

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void expect_well_formed(const NormalForm& nf) {
  const Permutation delta = Permutation::reversal(nf.degree);
  for (std::size_t t = 0; t < nf.factors.size(); ++t) {
    EXPECT_FALSE(nf.factors[t].is_identity());
    EXPECT_NE(nf.factors[t], delta);
    if (t + 1 < nf.factors.size()) {
      EXPECT_TRUE(subset(starting_set(nf.factors[t + 1]), finishing_set(nf.factors[t])));
    }
  }
}

TEST(NormalForm, Identity) {
  const NormalForm nf = normal_form(BraidWord(3));
  EXPECT_EQ(nf.infimum, 0);
  EXPECT_TRUE(nf.factors.empty());
  EXPECT_EQ(normal_form(BraidWord(3, {2, -2, 1, -1})), nf);
}

TEST(NormalForm, HalfTwist) {
  const NormalForm nf = normal_form(BraidWord(3, {1, 2, 1}));
  EXPECT_EQ(nf.infimum, 1);
  EXPECT_TRUE(nf.factors.empty());
  EXPECT_EQ(normal_form(BraidWord(3, {2, 1, 2})), nf);
}

TEST(NormalForm, MixedSignWord) {
  // sigma_1 sigma_2^-1 = Delta^-1 sigma_2 (sigma_2 sigma_1): the exponent sum
  // is 0, so the positive part after Delta^-1 has length 3 and needs two
  // simple factors. Checked against the Artin oracle before freezing.
  const BraidWord u(3, {1, -2});
  const BraidWord expected(3, {-1, -2, -1, 2, 2, 1});
  ASSERT_TRUE(artin_equal(u, expected));
  ASSERT_FALSE(artin_equal(u, BraidWord(3, {-1, -2, -1, 2, 1})));

  const NormalForm nf = normal_form(u);
  EXPECT_EQ(nf.infimum, -1);
  ASSERT_EQ(nf.factors.size(), 2u);
  EXPECT_EQ(nf.factors[0].images(), (std::vector<int>{1, 3, 2}));  // sigma_2
  EXPECT_EQ(nf.factors[1].images(), (std::vector<int>{2, 3, 1}));  // sigma_2 sigma_1
  EXPECT_EQ(permutation_braid(nf.factors[1]).letters(), (std::vector<int>{2, 1}));
  EXPECT_TRUE(artin_equal(to_word(nf), u));
}

TEST(NormalForm, DegreeOne) {
  const NormalForm nf = normal_form(BraidWord(1));
  EXPECT_EQ(nf.infimum, 0);
  EXPECT_TRUE(nf.factors.empty());
}

TEST(NormalForm, StartingAndFinishingSets) {
  const Permutation p = permutation_of(BraidWord(3, {1, 2}));
  EXPECT_EQ(starting_set(p), (std::vector<int>{1}));
  EXPECT_EQ(finishing_set(p), (std::vector<int>{2}));
  EXPECT_EQ(starting_set(Permutation::reversal(4)), (std::vector<int>{1, 2, 3}));
}

TEST(NormalForm, HalfTwistWordLength) {
  for (std::size_t m = 1; m <= 6; ++m) EXPECT_EQ(half_twist(m).size(), m * (m - 1) / 2);
}

TEST(NormalFormProperties, RoundTripAndShape) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t m = 2 + rng() % 4;
    const BraidWord u = testing::random_word(rng, m, rng() % 16);
    const NormalForm nf = normal_form(u);
    expect_well_formed(nf);
    EXPECT_TRUE(artin_equal(to_word(nf), u)) << u.to_string();
    EXPECT_EQ(normal_form(to_word(nf)), nf);
  }
}

TEST(NormalFormProperties, CanonicalExactlyOnEqualElements) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t m = 2 + rng() % 4;
    const BraidWord u = testing::random_word(rng, m, rng() % 12);
    const BraidWord v = trial % 2 ? testing::random_rewrite(rng, u, 10) : testing::random_word(rng, m, rng() % 12);
    EXPECT_EQ(normal_form(u) == normal_form(v), artin_equal(u, v));
  }
}

TEST(NormalFormProperties, ExponentSumMatchesInfimumAndFactorLengths) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 2 + rng() % 4;
    const BraidWord u = testing::random_word(rng, m, rng() % 14);
    long sum = 0;
    for (int a : u.letters()) sum += a > 0 ? 1 : -1;
    const NormalForm nf = normal_form(u);
    long length = nf.infimum * static_cast<long>(m * (m - 1) / 2);
    for (const auto& f : nf.factors) length += static_cast<long>(f.inversions());
    EXPECT_EQ(length, sum);
  }
}

}  // namespace
}  // namespace braid2d
