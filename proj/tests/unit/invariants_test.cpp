#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "braid2d/error.hpp"
#include "braid2d/invariants.hpp"
#include "braid2d/markov_search.hpp"
#include "test_support.hpp"

namespace braid2d {
namespace {

// Plain enumeration of every generator assignment in S_n, with permutation
// products computed directly; no pruning and no component splitting.
std::uint64_t brute_force_homs(const GroupPresentation& p, int n) {
  std::vector<std::vector<int>> group;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do group.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  const auto evaluate = [&](const FreeWord& r, const std::vector<std::size_t>& choice) {
    std::vector<int> acc(static_cast<std::size_t>(n));
    std::iota(acc.begin(), acc.end(), 0);
    for (int a : r.letters()) {
      const auto& g = group[choice[static_cast<std::size_t>(std::abs(a) - 1)]];
      std::vector<int> step(static_cast<std::size_t>(n));
      if (a > 0) {
        for (int x = 0; x < n; ++x) step[x] = g[acc[x]];
      } else {
        std::vector<int> inv(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) inv[g[x]] = x;
        for (int x = 0; x < n; ++x) step[x] = inv[acc[x]];
      }
      acc = step;
    }
    for (int x = 0; x < n; ++x) {
      if (acc[x] != x) return false;
    }
    return true;
  };

  std::uint64_t count = 0;
  std::vector<std::size_t> choice(p.rank, 0);
  for (;;) {
    bool ok = true;
    for (const auto& r : p.relators) {
      if (!evaluate(r, choice)) {
        ok = false;
        break;
      }
    }
    count += ok;
    std::size_t g = 0;
    while (g < p.rank && ++choice[g] == group.size()) choice[g++] = 0;
    if (g == p.rank) break;
  }
  return count;
}

MonodromyTuple tuple(std::size_t m, std::vector<EntrySpec> specs) {
  return MonodromyTuple::from_specs(m, specs);
}

TEST(EulerCharacteristic, Examples) {
  EXPECT_EQ(euler_characteristic_closure(b_star()), 2);
  EXPECT_EQ(euler_characteristic_closure(braid_sum(b_star(), b_star())), 0);
  EXPECT_EQ(euler_characteristic_closure(iota(b_star(), 1, 0)), 4);
}

TEST(Components, Examples) {
  EXPECT_EQ(components(b_star()), 1u);
  EXPECT_EQ(components(iota(b_star(), 1, 0)), 2u);
  EXPECT_EQ(sheet_orbits(iota(b_star(), 1, 0)), (std::vector<std::vector<int>>{{1}, {2, 3}}));
  EXPECT_EQ(components(MonodromyTuple::empty(4)), 4u);
}

TEST(GenusList, Examples) {
  EXPECT_EQ(genus_list(b_star()), (std::vector<long>{0}));
  EXPECT_EQ(genus_list(braid_sum(b_star(), b_star())), (std::vector<long>{1}));
  EXPECT_EQ(genus_list(iota(b_star(), 1, 0)), (std::vector<long>{0, 0}));
  EXPECT_EQ(genus_list(MonodromyTuple::empty(2)), (std::vector<long>{0, 0}));
}

TEST(ComplementGroup, BStar) {
  const GroupPresentation p = complement_group(b_star());
  EXPECT_EQ(p.rank, 2u);
  ASSERT_EQ(p.relators.size(), 2u);
  EXPECT_EQ(p.relators[0], FreeWord(2, std::vector<int>{1, -2}));
  EXPECT_EQ(p.relators[1], FreeWord(2, std::vector<int>{1, -2}));
}

TEST(ComplementGroup, StabilizedBStarIsInfiniteCyclic) {
  const GroupPresentation p = complement_group(stabilize(b_star()));
  EXPECT_EQ(p.rank, 3u);
  ASSERT_EQ(p.relators.size(), 4u);
  EXPECT_EQ(p.relators[0], FreeWord(3, std::vector<int>{1, -2}));
  EXPECT_EQ(p.relators[2], FreeWord(3, std::vector<int>{2, -3}));
  EXPECT_EQ(abelianization_rank(p), 1u);
  // Z has exactly |S_n| homomorphisms to S_n.
  EXPECT_EQ(brute_force_homs(p, 3), 6u);
  EXPECT_EQ(count_homs(p, 3), 6u);
}

TEST(ComplementGroup, EmptyTupleIsFree) {
  const GroupPresentation p = complement_group(MonodromyTuple::empty(3));
  EXPECT_EQ(p.rank, 3u);
  EXPECT_TRUE(p.relators.empty());
  EXPECT_EQ(abelianization_rank(p), 3u);
}

TEST(ComplementGroup, RelatorDependsOnlyOnTheBandElement) {
  // sigma_1 = (sigma_2 sigma_1) sigma_2 (sigma_2 sigma_1)^-1 in B_3.
  const BandEntry plain(BraidWord(3), 1, 1);
  const BandEntry disguised(BraidWord(3, {2, 1}), 2, 1);
  ASSERT_TRUE(equal(plain.expand(), disguised.expand()));
  const auto relator = [](const BandEntry& e) {
    return complement_group(MonodromyTuple(3, {e, BandEntry(e.conjugator(), e.index(), -e.exponent())}))
        .relators[0];
  };
  const FreeWord r = relator(disguised);
  // A conjugate of x_1 x_2^-1.
  EXPECT_EQ(r.exponent_sums(), (std::vector<long>{1, -1, 0}));
  EXPECT_EQ(relator(plain), FreeWord(3, std::vector<int>{1, -2}));
}

TEST(AbelianizationRank, Examples) {
  EXPECT_EQ(abelianization_rank(complement_group(b_star())), 1u);
  EXPECT_EQ(abelianization_rank(GroupPresentation{4, {}}), 4u);
  EXPECT_EQ(abelianization_rank(GroupPresentation{3, {FreeWord(3, std::vector<int>{1, -2})}}), 2u);
  // x1 = x2 twice and x2 = x3 leaves one free generator.
  EXPECT_EQ(abelianization_rank(GroupPresentation{
                3,
                {FreeWord(3, std::vector<int>{1, -2}), FreeWord(3, std::vector<int>{2, 1, -2, -2}),
                 FreeWord(3, std::vector<int>{2, -3})}}),
            1u);
}

TEST(CountHoms, Examples) {
  const GroupPresentation z = complement_group(b_star());
  EXPECT_EQ(brute_force_homs(z, 3), 6u);
  EXPECT_EQ(count_homs(z, 3), 6u);
  EXPECT_EQ(count_homs(GroupPresentation{2, {}}, 3), 36u);
  // <x | x x^-1>: the relator reduces away.
  EXPECT_EQ(count_homs(GroupPresentation{1, {FreeWord(1, std::vector<int>{1, -1})}}, 2), 2u);
}

TEST(CountHoms, KnownGroups) {
  // <x | x^2> -> S_3: the identity and the three transpositions.
  EXPECT_EQ(count_homs(GroupPresentation{1, {FreeWord(1, std::vector<int>{1, 1})}}, 3), 4u);
  // Z^2 = <x, y | x y x^-1 y^-1> -> S_3: commuting pairs, 6 * 3 conjugacy classes = 18.
  const GroupPresentation z2{2, {FreeWord(2, std::vector<int>{1, 2, -1, -2})}};
  EXPECT_EQ(brute_force_homs(z2, 3), 18u);
  EXPECT_EQ(count_homs(z2, 3), 18u);
}

TEST(CountHoms, BudgetAndRange) {
  const GroupPresentation tight{3, {FreeWord(3, std::vector<int>{1, 2, 3, -1, -2, -3})}};
  try {
    count_homs(tight, 5, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  EXPECT_THROW(count_homs(tight, 6), Error);
  EXPECT_THROW(count_homs(tight, 0), Error);
}

TEST(CountHoms, AgreesWithBruteForceOnTuples) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const MonodromyTuple t = testing::random_tuple(rng, 4, 6, 2);
    const GroupPresentation p = complement_group(t);
    for (int n : {2, 3}) EXPECT_EQ(count_homs(p, n), brute_force_homs(p, n));
  }
}

TEST(InvariantProperties, AbelianizationRankCountsComponents) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const MonodromyTuple t = testing::random_tuple(rng, 5, 8, 3);
    EXPECT_EQ(abelianization_rank(complement_group(t)), components(t));
  }
}

TEST(InvariantProperties, GenusAndEulerCharacteristicAgree) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    const MonodromyTuple t = testing::random_tuple(rng, 5, 8, 3);
    const auto genera = genus_list(t);
    long chi = 0;
    for (long g : genera) chi += 2 - 2 * g;
    EXPECT_EQ(chi, euler_characteristic_closure(t));
  }
}

TEST(InvariantProperties, IotaAddsSphereComponents) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const MonodromyTuple t = testing::random_tuple(rng, 4, 6, 2);
    const std::size_t a = rng() % 3;
    const std::size_t b = rng() % 3;
    const MonodromyTuple wide = iota(t, a, b);
    EXPECT_EQ(components(wide), components(t) + a + b);
    EXPECT_EQ(euler_characteristic_closure(wide), euler_characteristic_closure(t) + 2 * static_cast<long>(a + b));
    auto g = genus_list(t);
    g.insert(g.end(), a + b, 0);
    auto gw = genus_list(wide);
    std::sort(g.begin(), g.end());
    std::sort(gw.begin(), gw.end());
    EXPECT_EQ(gw, g);
  }
}

TEST(InvariantProperties, BraidSumAddsBranchPoints) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const MonodromyTuple t = testing::random_tuple(rng, 4, 6, 2);
    const MonodromyTuple u = conjugate(t, testing::random_word(rng, t.degree(), 2));
    const MonodromyTuple s = braid_sum(t, u);
    EXPECT_EQ(s.branch_count(), t.branch_count() + u.branch_count());
    EXPECT_EQ(euler_characteristic_closure(s),
              euler_characteristic_closure(t) + euler_characteristic_closure(u) - 2 * static_cast<long>(t.degree()));
  }
}

TEST(InvariantProperties, MovesPreserveInvariants) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const MonodromyTuple t = testing::random_tuple(rng, 4, 6, 2);
    const InvariantSummary base = summarize(t);
    const auto homs4 = count_homs(complement_group(t), 4);
    SearchBounds wide;
    wide.max_conjugator_length = 100;
    wide.max_degree = 10;
    for (const auto& [mv, next] : neighbors(t, wide)) {
      const InvariantSummary s = summarize(next);
      EXPECT_EQ(s.euler_characteristic, base.euler_characteristic) << mv.to_string();
      EXPECT_EQ(s.components, base.components) << mv.to_string();
      EXPECT_EQ(s.genus_multiset, base.genus_multiset) << mv.to_string();
      EXPECT_EQ(s.abelianization_rank, base.abelianization_rank) << mv.to_string();
      EXPECT_EQ(s.homs_to_s3, base.homs_to_s3) << mv.to_string();
      EXPECT_EQ(count_homs(complement_group(next), 4), homs4) << mv.to_string();
    }
  }
}

}  // namespace
}  // namespace braid2d
