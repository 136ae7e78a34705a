#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace braid2d {

// Cancels adjacent pairs (a, -a) until none remain.
std::vector<int> free_reduce(std::span<const int> letters);

// A freely reduced word in the free group on x_1..x_rank; letter j stands for
// x_|j| raised to sign(j).
class FreeWord {
 public:
  FreeWord() = default;
  // Throws Error(IndexOutOfRange) on a zero letter or |letter| > rank.
  FreeWord(std::size_t rank, std::span<const int> letters);

  static FreeWord generator(std::size_t rank, int j);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  FreeWord inverse() const;
  // Exponent sum of each generator, index 0 for x_1.
  std::vector<long> exponent_sums() const;
  // "x1 x2 x1^-1"; "1" for the empty word.
  std::string to_string() const;

  friend FreeWord operator*(const FreeWord& lhs, const FreeWord& rhs);
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<int> letters_;
};

FreeWord free_reduce(const FreeWord& w);

}  // namespace braid2d
