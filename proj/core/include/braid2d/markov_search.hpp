#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "braid2d/monodromy_tuple.hpp"
#include "braid2d/normal_form.hpp"

namespace braid2d {

// Degree plus the normal form of every expanded entry, in order. Two tuples
// whose entries are equal braid elements share a key.
struct CanonicalKey {
  std::size_t degree = 1;
  std::vector<NormalForm> entries;

  // Compact byte string, equal iff the keys are equal; used for hashing.
  std::string encode() const;
  std::string to_string() const;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

CanonicalKey canonical_key(const MonodromyTuple& t);

enum class MoveKind { HurwitzForward, HurwitzBackward, Conjugate, Stabilize, Destabilize };

// A single Markov-type move. `parameter` is the one-based position for the
// Hurwitz kinds, the signed generator letter for Conjugate, and 0 otherwise.
struct Move {
  MoveKind kind = MoveKind::Stabilize;
  int parameter = 0;

  static Move hurwitz_forward(int position) { return {MoveKind::HurwitzForward, position}; }
  static Move hurwitz_backward(int position) { return {MoveKind::HurwitzBackward, position}; }
  static Move conjugate(int letter) { return {MoveKind::Conjugate, letter}; }
  static Move stabilize() { return {MoveKind::Stabilize, 0}; }
  static Move destabilize() { return {MoveKind::Destabilize, 0}; }

  // Script token: H<i>, H<i>', C<+-j>, S, D.
  std::string to_string() const;

  // Kind first, then parameter; conjugation letters order as +1, -1, +2, ...
  friend std::strong_ordering operator<=>(const Move& a, const Move& b);
  friend bool operator==(const Move&, const Move&) = default;
};

// Throws Error(Parse) on a malformed token.
Move parse_move(const std::string& token);
std::vector<Move> parse_move_script(const std::string& script);
std::string format_move_script(const std::vector<Move>& moves);

Move inverse_move(const Move& m);

// nullopt when the move does not apply to t.
std::optional<MonodromyTuple> try_apply(const MonodromyTuple& t, const Move& m);

// Which move families the search may use.
struct MoveSet {
  bool hurwitz = true;
  bool conjugation = true;
  bool stabilization = true;
};

struct SearchBounds {
  std::size_t max_depth = 8;
  std::size_t max_degree = 6;
  std::size_t max_conjugator_length = 4;
  std::size_t node_budget = 1'000'000;
  MoveSet moves;
};

// Every applicable move within bounds, sorted by Move order. A neighbor is
// dropped if any of its conjugators exceeds max_conjugator_length; Stabilize
// needs degree < max_degree.
std::vector<std::pair<Move, MonodromyTuple>> neighbors(const MonodromyTuple& t,
                                                       const SearchBounds& bounds);

struct Equivalent {
  std::vector<Move> trace;
};
struct Distinct {
  std::string invariant;
  std::string left;
  std::string right;
};
struct Unknown {
  std::size_t explored = 0;
};
using Verdict = std::variant<Equivalent, Distinct, Unknown>;

std::string verdict_name(const Verdict& v);

// Move invariants used by the screen, in screening order.
struct InvariantSummary {
  long euler_characteristic = 0;
  std::size_t components = 0;
  std::vector<long> genus_multiset;  // sorted
  std::size_t abelianization_rank = 0;
  std::optional<std::uint64_t> homs_to_s3;
};
InvariantSummary summarize(const MonodromyTuple& t);

// Screens invariants, then runs a bidirectional breadth-first search over
// canonical keys. An Equivalent trace has minimal length among the paths the
// search discovered, ties broken by lexicographic Move order, and replays
// from t to a tuple with u's canonical key. Deterministic for fixed input.
Verdict search_equivalence(const MonodromyTuple& t, const MonodromyTuple& u,
                           const SearchBounds& bounds);

// Applies the moves in order. Throws Error(InapplicableMove) with the
// zero-based trace position of the first move that does not apply.
MonodromyTuple verify_trace(const MonodromyTuple& t, const std::vector<Move>& trace);

// Every valid simple tuple of degree m with k entries whose conjugators have
// length <= max_conjugator_length, once per sequence of band elements. Bands
// are represented by their shortlex-least conjugator.
std::vector<MonodromyTuple> enumerate_tuples(std::size_t degree, std::size_t branch_count,
                                             std::size_t max_conjugator_length);
void for_each_tuple(std::size_t degree, std::size_t branch_count,
                    std::size_t max_conjugator_length,
                    const std::function<void(const MonodromyTuple&)>& visit);

// Breadth-first closure of t under the moves within bounds.
struct Exploration {
  std::vector<CanonicalKey> keys;  // discovery order
  bool complete = false;           // false if depth or budget cut the search
};
Exploration explore(const MonodromyTuple& t, const SearchBounds& bounds);

struct CensusClass {
  std::size_t representative = 0;      // index into the input
  std::vector<std::size_t> members;    // indices into the input, ascending
  InvariantSummary invariants;
  bool closed = false;  // exploration from the representative was exhaustive
};

// Groups tuples into classes of move-connected tuples. A class is a lower
// bound: two classes with equal invariants may still be equivalent beyond the
// bounds.
std::vector<CensusClass> census(const std::vector<MonodromyTuple>& tuples,
                                const SearchBounds& bounds);

}  // namespace braid2d
