#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "braid2d/free_word.hpp"
#include "braid2d/permutation.hpp"

namespace braid2d {

// A word in the Artin generators of B_m. Letter i denotes sigma_|i| raised to
// sign(i); 1 <= |i| <= m-1 is enforced at construction. Words are stored as
// given; use free_reduce or multiply to cancel.
class BraidWord {
 public:
  explicit BraidWord(std::size_t degree, std::vector<int> letters = {});

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // "1,-2,3"; empty string for the identity word.
  std::string to_string() const;

  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::size_t degree_;
  std::vector<int> letters_;
};

BraidWord free_reduce(const BraidWord& w);

// Concatenation followed by free reduction. Throws Error(DegreeMismatch).
BraidWord multiply(const BraidWord& u, const BraidWord& v);
BraidWord inverse(const BraidWord& u);

// Image under B_m -> S_m, sigma_i -> (i i+1); the first letter acts first.
Permutation permutation_of(const BraidWord& u);

// Right Artin action on the free group F_m: sigma_i sends x_i to
// x_i x_{i+1} x_i^-1 and x_{i+1} to x_i, fixing the other generators. The
// word acts letter by letter, first letter first, so the action of uv is the
// action of u followed by the action of v. Throws Error(RankMismatch).
FreeWord artin_act(const BraidWord& u, const FreeWord& x);

// w sigma_i^e w^-1, freely reduced. Throws Error(IndexOutOfRange).
BraidWord band_generator(const BraidWord& w, int i, int e);

// Word problem, decided by comparing left normal forms.
bool equal(const BraidWord& u, const BraidWord& v);
bool is_identity(const BraidWord& u);

}  // namespace braid2d
