#include "braid2d/markov_search.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "braid2d/error.hpp"
#include "braid2d/invariants.hpp"

namespace braid2d {

namespace {

void append_int(std::string& out, long value) {
  const auto v = static_cast<std::int32_t>(value);
  out.append(reinterpret_cast<const char*>(&v), sizeof v);
}

std::string key_bytes(const MonodromyTuple& t) { return canonical_key(t).encode(); }

// Conjugation letters order as +1, -1, +2, -2, ...
int letter_rank(int letter) { return 2 * std::abs(letter) + (letter < 0 ? 1 : 0); }

bool within(const MonodromyTuple& t, const SearchBounds& bounds) {
  return t.max_conjugator_length() <= bounds.max_conjugator_length &&
         t.degree() <= bounds.max_degree;
}

std::string join(const std::vector<long>& values) {
  std::ostringstream os;
  os << '[';
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (t) os << ',';
    os << values[t];
  }
  os << ']';
  return os.str();
}

bool trace_less(const std::vector<Move>& a, const std::vector<Move>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

// One half of the bidirectional search. On the forward side `via` is the move
// taking the parent to the node; on the backward side it is the move taking
// the node to its parent.
struct SearchSide {
  struct Node {
    MonodromyTuple tuple;
    std::size_t parent;
    Move via;
  };

  explicit SearchSide(const MonodromyTuple& root) {
    nodes.push_back({root, kNoParent, Move{}});
    index.emplace(key_bytes(root), 0);
    frontier.push_back(0);
  }

  // Moves along the tree path, oriented from the forward root outwards on
  // the forward side and towards the backward root on the backward side.
  std::vector<Move> path(std::size_t node, bool forward) const {
    std::vector<Move> moves;
    for (std::size_t at = node; nodes[at].parent != kNoParent; at = nodes[at].parent) {
      moves.push_back(nodes[at].via);
    }
    if (forward) std::reverse(moves.begin(), moves.end());
    return moves;
  }

  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::size_t> frontier;
  std::size_t depth = 0;
};

}  // namespace

std::string CanonicalKey::encode() const {
  std::string out;
  append_int(out, static_cast<long>(degree));
  append_int(out, static_cast<long>(entries.size()));
  for (const auto& nf : entries) {
    append_int(out, nf.infimum);
    append_int(out, static_cast<long>(nf.factors.size()));
    for (const auto& f : nf.factors) {
      for (int y : f.images()) out.push_back(static_cast<char>(y));
    }
  }
  return out;
}

std::string CanonicalKey::to_string() const {
  std::ostringstream os;
  os << "degree " << degree;
  for (const auto& nf : entries) os << "\n  " << nf.to_string();
  return os.str();
}

CanonicalKey canonical_key(const MonodromyTuple& t) {
  CanonicalKey key{t.degree(), {}};
  key.entries.reserve(t.branch_count());
  for (const auto& e : t.entries()) key.entries.push_back(normal_form(e.expand()));
  return key;
}

std::string Move::to_string() const {
  switch (kind) {
    case MoveKind::HurwitzForward: return "H" + std::to_string(parameter);
    case MoveKind::HurwitzBackward: return "H" + std::to_string(parameter) + "'";
    case MoveKind::Conjugate:
      return std::string("C") + (parameter > 0 ? "+" : "-") + std::to_string(std::abs(parameter));
    case MoveKind::Stabilize: return "S";
    case MoveKind::Destabilize: return "D";
  }
  return "?";
}

std::strong_ordering operator<=>(const Move& a, const Move& b) {
  if (a.kind != b.kind) return a.kind <=> b.kind;
  if (a.kind == MoveKind::Conjugate) return letter_rank(a.parameter) <=> letter_rank(b.parameter);
  return a.parameter <=> b.parameter;
}

Move parse_move(const std::string& token) {
  const auto fail = [&token]() -> Error {
    return Error(ErrorCode::Parse, "malformed move token '" + token + "'");
  };
  if (token == "S") return Move::stabilize();
  if (token == "D") return Move::destabilize();
  if (token.size() < 2) throw fail();
  const auto digits_from = [&](std::size_t begin, std::size_t end) {
    if (begin >= end) throw fail();
    for (std::size_t t = begin; t < end; ++t) {
      if (!std::isdigit(static_cast<unsigned char>(token[t]))) throw fail();
    }
    const long value = std::stol(token.substr(begin, end - begin));
    if (value <= 0 || value > 1'000'000) throw fail();
    return static_cast<int>(value);
  };
  if (token[0] == 'H') {
    const bool backward = token.back() == '\'';
    const int position = digits_from(1, token.size() - (backward ? 1 : 0));
    return backward ? Move::hurwitz_backward(position) : Move::hurwitz_forward(position);
  }
  if (token[0] == 'C') {
    std::size_t begin = 1;
    int sign = 1;
    if (token[1] == '+' || token[1] == '-') {
      sign = token[1] == '-' ? -1 : 1;
      begin = 2;
    }
    return Move::conjugate(sign * digits_from(begin, token.size()));
  }
  throw fail();
}

std::vector<Move> parse_move_script(const std::string& script) {
  std::istringstream is(script);
  std::vector<Move> moves;
  for (std::string token; is >> token;) moves.push_back(parse_move(token));
  return moves;
}

std::string format_move_script(const std::vector<Move>& moves) {
  std::string out;
  for (const auto& m : moves) {
    if (!out.empty()) out += ' ';
    out += m.to_string();
  }
  return out;
}

Move inverse_move(const Move& m) {
  switch (m.kind) {
    case MoveKind::HurwitzForward: return Move::hurwitz_backward(m.parameter);
    case MoveKind::HurwitzBackward: return Move::hurwitz_forward(m.parameter);
    case MoveKind::Conjugate: return Move::conjugate(-m.parameter);
    case MoveKind::Stabilize: return Move::destabilize();
    case MoveKind::Destabilize: return Move::stabilize();
  }
  return m;
}

std::optional<MonodromyTuple> try_apply(const MonodromyTuple& t, const Move& m) {
  switch (m.kind) {
    case MoveKind::HurwitzForward:
    case MoveKind::HurwitzBackward: {
      if (m.parameter < 1 || static_cast<std::size_t>(m.parameter) >= t.branch_count()) {
        return std::nullopt;
      }
      return hurwitz(t, static_cast<std::size_t>(m.parameter),
                     m.kind == MoveKind::HurwitzForward ? HurwitzDirection::Forward
                                                        : HurwitzDirection::Backward);
    }
    case MoveKind::Conjugate: {
      if (m.parameter == 0 || static_cast<std::size_t>(std::abs(m.parameter)) >= t.degree()) {
        return std::nullopt;
      }
      return conjugate(t, BraidWord(t.degree(), {m.parameter}));
    }
    case MoveKind::Stabilize: return stabilize(t);
    case MoveKind::Destabilize: return destabilize(t);
  }
  return std::nullopt;
}

std::vector<std::pair<Move, MonodromyTuple>> neighbors(const MonodromyTuple& t,
                                                       const SearchBounds& bounds) {
  std::vector<Move> candidates;
  const int k = static_cast<int>(t.branch_count());
  const int m = static_cast<int>(t.degree());
  if (bounds.moves.hurwitz) {
    for (int p = 1; p < k; ++p) candidates.push_back(Move::hurwitz_forward(p));
    for (int p = 1; p < k; ++p) candidates.push_back(Move::hurwitz_backward(p));
  }
  if (bounds.moves.conjugation) {
    for (int j = 1; j < m; ++j) {
      candidates.push_back(Move::conjugate(j));
      candidates.push_back(Move::conjugate(-j));
    }
  }
  if (bounds.moves.stabilization) {
    if (t.degree() < bounds.max_degree) candidates.push_back(Move::stabilize());
    candidates.push_back(Move::destabilize());
  }

  std::vector<std::pair<Move, MonodromyTuple>> out;
  out.reserve(candidates.size());
  for (const Move& mv : candidates) {
    auto next = try_apply(t, mv);
    if (next && within(*next, bounds)) out.emplace_back(mv, std::move(*next));
  }
  return out;
}

std::string verdict_name(const Verdict& v) {
  if (std::holds_alternative<Equivalent>(v)) return "Equivalent";
  if (std::holds_alternative<Distinct>(v)) return "Distinct";
  return "Unknown";
}

InvariantSummary summarize(const MonodromyTuple& t) {
  InvariantSummary s;
  s.euler_characteristic = euler_characteristic_closure(t);
  s.components = components(t);
  s.genus_multiset = genus_list(t);
  std::sort(s.genus_multiset.begin(), s.genus_multiset.end());
  const GroupPresentation group = complement_group(t);
  s.abelianization_rank = abelianization_rank(group);
  try {
    s.homs_to_s3 = count_homs(group, 3);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
  }
  return s;
}

Verdict search_equivalence(const MonodromyTuple& t, const MonodromyTuple& u,
                           const SearchBounds& bounds) {
  const InvariantSummary left = summarize(t);
  const InvariantSummary right = summarize(u);
  if (left.euler_characteristic != right.euler_characteristic) {
    return Distinct{"euler_characteristic", std::to_string(left.euler_characteristic),
                    std::to_string(right.euler_characteristic)};
  }
  if (left.components != right.components) {
    return Distinct{"components", std::to_string(left.components),
                    std::to_string(right.components)};
  }
  if (left.genus_multiset != right.genus_multiset) {
    return Distinct{"genus_multiset", join(left.genus_multiset), join(right.genus_multiset)};
  }
  if (left.abelianization_rank != right.abelianization_rank) {
    return Distinct{"abelianization_rank", std::to_string(left.abelianization_rank),
                    std::to_string(right.abelianization_rank)};
  }
  if (left.homs_to_s3 && right.homs_to_s3 && *left.homs_to_s3 != *right.homs_to_s3) {
    return Distinct{"homs_to_s3", std::to_string(*left.homs_to_s3),
                    std::to_string(*right.homs_to_s3)};
  }

  if (key_bytes(t) == key_bytes(u)) return Equivalent{};
  SearchSide forward(t);
  SearchSide backward(u);

  const auto explored = [&] { return forward.nodes.size() + backward.nodes.size(); };
  while (forward.depth + backward.depth < bounds.max_depth) {
    const bool expand_forward = forward.frontier.size() <= backward.frontier.size();
    SearchSide& side = expand_forward ? forward : backward;
    const SearchSide& other = expand_forward ? backward : forward;
    if (side.frontier.empty()) break;

    std::vector<std::size_t> next_frontier;
    std::optional<std::vector<Move>> best;
    for (const std::size_t at : side.frontier) {
      const MonodromyTuple parent = side.nodes[at].tuple;
      for (auto& [mv, next] : neighbors(parent, bounds)) {
        std::string key = key_bytes(next);
        if (side.index.count(key)) continue;
        Move edge = mv;
        if (!expand_forward) {
          edge = inverse_move(mv);
          // A destabilization is only reversed exactly when the bands it
          // removed were in stabilization order.
          if (mv.kind == MoveKind::Destabilize && key_bytes(stabilize(next)) != key_bytes(parent)) {
            continue;
          }
        }
        const std::size_t id = side.nodes.size();
        side.nodes.push_back({std::move(next), at, edge});
        side.index.emplace(key, id);
        next_frontier.push_back(id);

        if (auto hit = other.index.find(key); hit != other.index.end()) {
          const std::size_t fwd_node = expand_forward ? id : hit->second;
          const std::size_t bwd_node = expand_forward ? hit->second : id;
          std::vector<Move> trace = forward.path(fwd_node, true);
          const std::vector<Move> tail = backward.path(bwd_node, false);
          trace.insert(trace.end(), tail.begin(), tail.end());
          if (!best || trace_less(trace, *best)) best = std::move(trace);
        }
        if (explored() > bounds.node_budget) return Unknown{explored()};
      }
    }
    side.frontier = std::move(next_frontier);
    ++side.depth;
    if (best) return Equivalent{std::move(*best)};
  }
  return Unknown{explored()};
}

MonodromyTuple verify_trace(const MonodromyTuple& t, const std::vector<Move>& trace) {
  MonodromyTuple current = t;
  for (std::size_t p = 0; p < trace.size(); ++p) {
    auto next = try_apply(current, trace[p]);
    if (!next) {
      throw Error(ErrorCode::InapplicableMove,
                  "move " + std::to_string(p + 1) + " (" + trace[p].to_string() +
                      ") does not apply",
                  p);
    }
    current = std::move(*next);
  }
  return current;
}

void for_each_tuple(std::size_t degree, std::size_t branch_count,
                    std::size_t max_conjugator_length,
                    const std::function<void(const MonodromyTuple&)>& visit) {
  if (branch_count == 0) {
    visit(MonodromyTuple::empty(degree));
    return;
  }
  const int top = static_cast<int>(degree) - 1;
  std::vector<int> alphabet;
  for (int a = -top; a <= top; ++a) {
    if (a != 0) alphabet.push_back(a);
  }

  // Distinct band elements, each with its shortlex-least stored form.
  std::map<std::string, BandEntry> by_element;
  std::vector<std::vector<int>> layer{{}};
  for (std::size_t len = 0; len <= max_conjugator_length; ++len) {
    std::vector<std::vector<int>> next_layer;
    for (const auto& w : layer) {
      for (int i = 1; i <= top; ++i) {
        for (int e : {1, -1}) {
          BandEntry band(BraidWord(degree, w), i, e);
          std::string element = normal_form(band.expand()).to_string();
          auto [it, inserted] = by_element.emplace(element, band);
          const auto shortlex = [](const BandEntry& x) {
            return std::make_pair(x.conjugator().size(), x.conjugator().letters());
          };
          if (!inserted && shortlex(band) < shortlex(it->second)) it->second = band;
        }
      }
      if (len == max_conjugator_length) continue;
      for (int a : alphabet) {
        if (!w.empty() && w.back() == -a) continue;
        auto longer = w;
        longer.push_back(a);
        next_layer.push_back(std::move(longer));
      }
    }
    layer = std::move(next_layer);
  }

  std::vector<BandEntry> bands;
  for (auto& [element, band] : by_element) bands.push_back(band);
  std::sort(bands.begin(), bands.end(), [](const BandEntry& x, const BandEntry& y) {
    return std::make_tuple(x.conjugator().size(), x.conjugator().letters(), x.index(), -x.exponent()) <
           std::make_tuple(y.conjugator().size(), y.conjugator().letters(), y.index(), -y.exponent());
  });
  std::unordered_map<std::string, std::size_t> band_of_element;
  for (std::size_t b = 0; b < bands.size(); ++b) {
    band_of_element.emplace(normal_form(bands[b].expand()).to_string(), b);
  }

  std::vector<BandEntry> chosen;
  const std::function<void(const BraidWord&)> extend = [&](const BraidWord& prefix) {
    if (chosen.size() + 1 == branch_count) {
      auto hit = band_of_element.find(normal_form(inverse(prefix)).to_string());
      if (hit == band_of_element.end()) return;
      chosen.push_back(bands[hit->second]);
      visit(MonodromyTuple(degree, chosen));
      chosen.pop_back();
      return;
    }
    for (const auto& band : bands) {
      chosen.push_back(band);
      extend(multiply(prefix, band.expand()));
      chosen.pop_back();
    }
  };
  if (!bands.empty()) extend(BraidWord(degree));
}

std::vector<MonodromyTuple> enumerate_tuples(std::size_t degree, std::size_t branch_count,
                                             std::size_t max_conjugator_length) {
  std::vector<MonodromyTuple> out;
  for_each_tuple(degree, branch_count, max_conjugator_length,
                 [&out](const MonodromyTuple& t) { out.push_back(t); });
  return out;
}

Exploration explore(const MonodromyTuple& t, const SearchBounds& bounds) {
  Exploration result;
  std::unordered_set<std::string> seen;
  std::vector<MonodromyTuple> frontier{t};
  seen.insert(key_bytes(t));
  result.keys.push_back(canonical_key(t));
  for (std::size_t depth = 0; !frontier.empty(); ++depth) {
    if (depth == bounds.max_depth) return result;
    std::vector<MonodromyTuple> next_frontier;
    for (const auto& node : frontier) {
      for (auto& [mv, next] : neighbors(node, bounds)) {
        CanonicalKey key = canonical_key(next);
        if (!seen.insert(key.encode()).second) continue;
        result.keys.push_back(std::move(key));
        if (result.keys.size() > bounds.node_budget) return result;
        next_frontier.push_back(std::move(next));
      }
    }
    frontier = std::move(next_frontier);
  }
  result.complete = true;
  return result;
}

std::vector<CensusClass> census(const std::vector<MonodromyTuple>& tuples,
                                const SearchBounds& bounds) {
  std::vector<std::string> keys;
  keys.reserve(tuples.size());
  for (const auto& t : tuples) keys.push_back(key_bytes(t));
  std::vector<bool> assigned(tuples.size(), false);

  std::vector<CensusClass> classes;
  for (std::size_t rep = 0; rep < tuples.size(); ++rep) {
    if (assigned[rep]) continue;
    const Exploration reach = explore(tuples[rep], bounds);
    std::unordered_set<std::string> reached;
    for (const auto& k : reach.keys) reached.insert(k.encode());
    CensusClass cls;
    cls.representative = rep;
    cls.closed = reach.complete;
    cls.invariants = summarize(tuples[rep]);
    for (std::size_t j = rep; j < tuples.size(); ++j) {
      if (!assigned[j] && reached.count(keys[j])) {
        assigned[j] = true;
        cls.members.push_back(j);
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace braid2d
