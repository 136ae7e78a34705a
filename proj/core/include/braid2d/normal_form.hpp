#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "braid2d/braid_word.hpp"
#include "braid2d/permutation.hpp"

namespace braid2d {

// Left normal form Delta^infimum * A_1 * ... * A_r. Each A_t is a positive
// permutation braid, identified with its permutation, that is neither the
// identity nor Delta; every pair (A_t, A_{t+1}) is left-weighted.
struct NormalForm {
  std::size_t degree = 1;
  long infimum = 0;
  std::vector<Permutation> factors;

  // "D^-1 [1,3,2] [3,1,2]" with each factor written by its one-based images.
  std::string to_string() const;

  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm normal_form(const BraidWord& u);

// A word representing the same element as `nf`.
BraidWord to_word(const NormalForm& nf);

// Word of the positive permutation braid with the given permutation.
BraidWord permutation_braid(const Permutation& p);
BraidWord half_twist(std::size_t degree);

// Positions i (one-based) with sigma_i a left, resp. right, divisor of the
// permutation braid of p.
std::vector<int> starting_set(const Permutation& p);
std::vector<int> finishing_set(const Permutation& p);

}  // namespace braid2d
