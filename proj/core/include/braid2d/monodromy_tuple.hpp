#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "braid2d/braid_word.hpp"
#include "braid2d/error.hpp"
#include "braid2d/permutation.hpp"

namespace braid2d {

// Local monodromy w sigma_i^e w^-1 of one simple branch point.
//
// The conjugator is kept freely reduced with trailing letters +-i removed;
// those letters commute with sigma_i and cancel in the expansion, so the
// stored form is the shortest conjugator reachable by free cancellation and
// `expand()` needs no further reduction.
class BandEntry {
 public:
  // Throws Error(IndexOutOfRange) unless 1 <= index <= m-1 and
  // Error(NonSimpleEntry) unless exponent is +1 or -1.
  BandEntry(BraidWord conjugator, int index, int exponent);

  std::size_t degree() const noexcept { return conjugator_.degree(); }
  const BraidWord& conjugator() const noexcept { return conjugator_; }
  int index() const noexcept { return index_; }
  int exponent() const noexcept { return exponent_; }

  BraidWord expand() const;
  Permutation permutation() const;

  friend auto operator<=>(const BandEntry&, const BandEntry&) = default;
  friend bool operator==(const BandEntry&, const BandEntry&) = default;

 private:
  BraidWord conjugator_;
  int index_;
  int exponent_;
};

// Unvalidated entry as read from a document.
struct EntrySpec {
  std::vector<int> conjugator;
  int index = 0;
  int exponent = 0;

  friend bool operator==(const EntrySpec&, const EntrySpec&) = default;
};

enum class HurwitzDirection { Forward, Backward };

// A 2-dimensional braid of degree m given by its braid monodromy: an ordered
// tuple of band generators whose product, in order, is the identity of B_m.
// Instances always satisfy that invariant.
class MonodromyTuple {
 public:
  // Validates and throws the first Error found.
  MonodromyTuple(std::size_t degree, std::vector<BandEntry> entries);
  static MonodromyTuple from_specs(std::size_t degree, std::span<const EntrySpec> specs);
  static MonodromyTuple empty(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<BandEntry>& entries() const noexcept { return entries_; }
  std::size_t branch_count() const noexcept { return entries_.size(); }

  // Product of the expanded entry words, freely reduced.
  BraidWord total_product() const;
  std::size_t max_conjugator_length() const noexcept;
  std::vector<EntrySpec> specs() const;

  friend bool operator==(const MonodromyTuple&, const MonodromyTuple&) = default;

 private:
  struct Unchecked {};
  MonodromyTuple(std::size_t degree, std::vector<BandEntry> entries, Unchecked) noexcept
      : degree_(degree), entries_(std::move(entries)) {}

  std::size_t degree_;
  std::vector<BandEntry> entries_;

  friend MonodromyTuple braid_sum(const MonodromyTuple&, const MonodromyTuple&);
  friend MonodromyTuple conjugate(const MonodromyTuple&, const BraidWord&);
  friend MonodromyTuple iota(const MonodromyTuple&, std::size_t, std::size_t);
  friend MonodromyTuple b_star();
  friend std::optional<MonodromyTuple> destabilize(const MonodromyTuple&);
  friend MonodromyTuple hurwitz(const MonodromyTuple&, std::size_t, HurwitzDirection);
};

// Checks a raw tuple: degree >= 1, every entry well formed and simple, and
// trivial total product. Returns the first violation, with its entry index.
std::optional<Error> validate(std::size_t degree, std::span<const EntrySpec> specs);
// Re-checks an already constructed tuple from scratch.
std::optional<Error> validate(const MonodromyTuple& t);

// Concatenation. Throws Error(DegreeMismatch).
MonodromyTuple braid_sum(const MonodromyTuple& t, const MonodromyTuple& u);

// Replaces every conjugator w by b*w. Throws Error(DegreeMismatch).
MonodromyTuple conjugate(const MonodromyTuple& t, const BraidWord& b);

// Adds `below` untouched strands under and `above` over the braid; every
// letter and band index shifts by `below`.
MonodromyTuple iota(const MonodromyTuple& t, std::size_t below, std::size_t above);

// Degree 2, entries (sigma_1, sigma_1^-1).
MonodromyTuple b_star();

// iota(t, 0, 1) followed by the bands sigma_m and sigma_m^-1.
MonodromyTuple stabilize(const MonodromyTuple& t);

// Syntactic inverse of stabilize: fires when the last two entries expand to
// sigma_m and sigma_m^-1 (in either order) and no other expanded entry uses
// the letter +-m, where m+1 is the degree. Otherwise nullopt.
std::optional<MonodromyTuple> destabilize(const MonodromyTuple& t);

// Forward at one-based position i: (a_i, a_{i+1}) -> (a_i a_{i+1} a_i^-1, a_i).
// Backward is the inverse: (a_i, a_{i+1}) -> (a_{i+1}, a_{i+1}^-1 a_i a_{i+1}).
// Throws Error(PositionOutOfRange) unless 1 <= i < k.
MonodromyTuple hurwitz(const MonodromyTuple& t, std::size_t position, HurwitzDirection dir);

}  // namespace braid2d
