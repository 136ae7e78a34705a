#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace braid2d {

// A bijection of {1..m}. Composition reads left to right: `p.then(q)` applies
// p first, matching the order in which braid letters act.
class Permutation {
 public:
  explicit Permutation(std::size_t degree = 0);

  // One-based images; throws std::invalid_argument unless a bijection.
  static Permutation from_images(const std::vector<int>& images);
  // The transposition (i i+1), one-based.
  static Permutation transposition(std::size_t degree, int i);
  // x -> m+1-x, the image of the half twist.
  static Permutation reversal(std::size_t degree);

  std::size_t degree() const noexcept { return image_.size(); }
  int operator()(int point) const { return image_[point - 1] + 1; }

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;

  std::vector<int> images() const;
  // Disjoint cycle notation, fixed points omitted; "()" for the identity.
  std::string cycles() const;

  // Swaps the images of positions i and i+1 (one-based) in place; the
  // permutation becomes (i i+1) followed by *this.
  void swap_positions(int i) noexcept;
  // Swaps the values i and i+1 in place; *this followed by (i i+1).
  void swap_values(int i) noexcept;

  // Inversion count; for a permutation braid this is its word length.
  std::size_t inversions() const noexcept;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;  // zero-based
};

inline Permutation compose(const Permutation& first, const Permutation& second) {
  return first.then(second);
}

}  // namespace braid2d
