#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "braid2d/free_word.hpp"
#include "braid2d/monodromy_tuple.hpp"

namespace braid2d {

// Finitely presented group <x_1..x_rank | relators>.
struct GroupPresentation {
  std::size_t rank = 0;
  std::vector<FreeWord> relators;
};

// Riemann-Hurwitz for the closure: 2m - k.
long euler_characteristic_closure(const MonodromyTuple& t);

// Orbits of the group generated by the entry permutations, each sorted, in
// order of their smallest point.
std::vector<std::vector<int>> sheet_orbits(const MonodromyTuple& t);
std::size_t components(const MonodromyTuple& t);

// Genus of each closure component, in sheet_orbits order. Throws
// Error(InternalParityViolation) if a component has an odd branch count or
// negative genus, which a valid tuple cannot produce.
std::vector<long> genus_list(const MonodromyTuple& t);

// Meridian presentation of the closure complement: generators x_1..x_m and one
// relator per entry (w, i, e), namely y_i y_{i+1}^-1 where y_j is x_j under
// the Artin action of w^-1. A trivial conjugator gives x_i x_{i+1}^-1.
GroupPresentation complement_group(const MonodromyTuple& t);

// Free rank of the abelianized group: rank minus the rank of the exponent-sum
// relator matrix.
std::size_t abelianization_rank(const GroupPresentation& p);

// Default cap on the backtracking nodes visited by count_homs.
inline constexpr std::uint64_t kHomSearchBudget = 50'000'000;

// Number of homomorphisms to the symmetric group S_n, 1 <= n <= 5, by
// exhaustive backtracking over generator images. Generators that share no
// relator are counted independently. Throws Error(BudgetExceeded) past
// `budget` search nodes and Error(IndexOutOfRange) for n outside 1..5.
std::uint64_t count_homs(const GroupPresentation& p, int n,
                         std::uint64_t budget = kHomSearchBudget);

}  // namespace braid2d
