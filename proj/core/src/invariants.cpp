#include "braid2d/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "braid2d/error.hpp"

namespace braid2d {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// The two sheets (zero-based) swapped by an entry's monodromy.
std::pair<std::size_t, std::size_t> swapped_sheets(const BandEntry& e) {
  const Permutation back = permutation_of(e.conjugator()).inverse();
  return {static_cast<std::size_t>(back(e.index()) - 1),
          static_cast<std::size_t>(back(e.index() + 1) - 1)};
}

// The symmetric group S_n as indexed elements with a multiplication table.
struct SymmetricGroup {
  explicit SymmetricGroup(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
      elements.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const std::size_t order = elements.size();
    product.assign(order * order, 0);
    inverse.assign(order, 0);
    std::vector<int> q(static_cast<std::size_t>(n));
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        for (int x = 0; x < n; ++x) q[x] = elements[b][elements[a][x]];
        product[a * order + b] = index_of(q);
        if (q == elements[0]) inverse[a] = b;
      }
    }
  }

  std::size_t index_of(const std::vector<int>& p) const {
    return static_cast<std::size_t>(std::lower_bound(elements.begin(), elements.end(), p) -
                                    elements.begin());
  }
  std::size_t order() const { return elements.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return product[a * order() + b]; }

  std::vector<std::vector<int>> elements;  // lexicographic; index 0 is the identity
  std::vector<std::size_t> product;
  std::vector<std::size_t> inverse;
};

class HomCounter {
 public:
  HomCounter(const SymmetricGroup& group, std::uint64_t budget) : group_(group), budget_(budget) {}

  // Homomorphisms of <generators | relators> where every relator only uses
  // the listed generators.
  std::uint64_t count(const std::vector<std::size_t>& generators,
                      const std::vector<const FreeWord*>& relators) {
    order_ = plan_order(generators, relators);
    std::vector<std::size_t> level_of(order_.empty() ? 0 : *std::max_element(order_.begin(), order_.end()) + 1);
    for (std::size_t l = 0; l < order_.size(); ++l) level_of[order_[l]] = l;
    checks_.assign(order_.size(), {});
    for (const FreeWord* r : relators) {
      std::size_t level = 0;
      for (int a : r->letters()) level = std::max(level, level_of[std::abs(a) - 1]);
      checks_[level].push_back(r);
    }
    image_.assign(level_of.size(), 0);
    return descend(0);
  }

  std::uint64_t visited() const { return visited_; }

 private:
  // Greedy order: repeatedly take the generator completing the most relators.
  static std::vector<std::size_t> plan_order(const std::vector<std::size_t>& generators,
                                             const std::vector<const FreeWord*>& relators) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> remaining = generators;
    auto placed = [&](std::size_t g) {
      return std::find(order.begin(), order.end(), g) != order.end();
    };
    while (!remaining.empty()) {
      std::size_t best = 0;
      long best_score = -1;
      for (std::size_t c = 0; c < remaining.size(); ++c) {
        const std::size_t g = remaining[c];
        long score = 0;
        for (const FreeWord* r : relators) {
          bool uses = false;
          bool rest_placed = true;
          for (int a : r->letters()) {
            const std::size_t h = static_cast<std::size_t>(std::abs(a) - 1);
            if (h == g) {
              uses = true;
            } else if (!placed(h)) {
              rest_placed = false;
            }
          }
          if (uses && rest_placed) ++score;
        }
        if (score > best_score) {
          best_score = score;
          best = c;
        }
      }
      order.push_back(remaining[best]);
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return order;
  }

  bool satisfied(const FreeWord& r) const {
    std::size_t acc = 0;
    for (int a : r.letters()) {
      const std::size_t g = image_[static_cast<std::size_t>(std::abs(a) - 1)];
      acc = group_.mul(acc, a > 0 ? g : group_.inverse[g]);
    }
    return acc == 0;
  }

  std::uint64_t descend(std::size_t level) {
    if (level == order_.size()) return 1;
    std::uint64_t total = 0;
    for (std::size_t g = 0; g < group_.order(); ++g) {
      if (++visited_ > budget_) {
        throw Error(ErrorCode::BudgetExceeded,
                    "homomorphism search exceeded " + std::to_string(budget_) + " nodes");
      }
      image_[order_[level]] = g;
      bool ok = true;
      for (const FreeWord* r : checks_[level]) {
        if (!satisfied(*r)) {
          ok = false;
          break;
        }
      }
      if (ok) total += descend(level + 1);
    }
    return total;
  }

  const SymmetricGroup& group_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
  std::vector<std::size_t> order_;
  std::vector<std::vector<const FreeWord*>> checks_;
  std::vector<std::size_t> image_;
};

}  // namespace

long euler_characteristic_closure(const MonodromyTuple& t) {
  return 2 * static_cast<long>(t.degree()) - static_cast<long>(t.branch_count());
}

std::vector<std::vector<int>> sheet_orbits(const MonodromyTuple& t) {
  DisjointSets sets(t.degree());
  for (const auto& e : t.entries()) {
    const auto [a, b] = swapped_sheets(e);
    sets.unite(a, b);
  }
  std::vector<std::vector<int>> orbits;
  std::vector<long> slot(t.degree(), -1);
  for (std::size_t x = 0; x < t.degree(); ++x) {
    const std::size_t root = sets.find(x);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(orbits.size());
      orbits.emplace_back();
    }
    orbits[static_cast<std::size_t>(slot[root])].push_back(static_cast<int>(x) + 1);
  }
  return orbits;
}

std::size_t components(const MonodromyTuple& t) { return sheet_orbits(t).size(); }

std::vector<long> genus_list(const MonodromyTuple& t) {
  const auto orbits = sheet_orbits(t);
  std::vector<long> orbit_of(t.degree(), 0);
  for (std::size_t c = 0; c < orbits.size(); ++c) {
    for (int x : orbits[c]) orbit_of[static_cast<std::size_t>(x - 1)] = static_cast<long>(c);
  }
  std::vector<long> branch_points(orbits.size(), 0);
  for (const auto& e : t.entries()) {
    ++branch_points[static_cast<std::size_t>(orbit_of[swapped_sheets(e).first])];
  }
  std::vector<long> genera;
  genera.reserve(orbits.size());
  for (std::size_t c = 0; c < orbits.size(); ++c) {
    const long sheets = static_cast<long>(orbits[c].size());
    const long k = branch_points[c];
    if (k % 2 != 0) {
      throw Error(ErrorCode::InternalParityViolation,
                  "component " + std::to_string(c + 1) + " has " + std::to_string(k) +
                      " branch points");
    }
    const long genus = 1 - sheets + k / 2;
    if (genus < 0) {
      throw Error(ErrorCode::InternalParityViolation,
                  "component " + std::to_string(c + 1) + " has negative genus");
    }
    genera.push_back(genus);
  }
  return genera;
}

GroupPresentation complement_group(const MonodromyTuple& t) {
  GroupPresentation p{t.degree(), {}};
  p.relators.reserve(t.branch_count());
  for (const auto& e : t.entries()) {
    const BraidWord back = inverse(e.conjugator());
    const FreeWord lower = artin_act(back, FreeWord::generator(t.degree(), e.index()));
    const FreeWord upper = artin_act(back, FreeWord::generator(t.degree(), e.index() + 1));
    p.relators.push_back(lower * upper.inverse());
  }
  return p;
}

std::size_t abelianization_rank(const GroupPresentation& p) {
  std::vector<std::vector<long>> rows;
  rows.reserve(p.relators.size());
  for (const auto& r : p.relators) rows.push_back(r.exponent_sums());

  std::size_t rank = 0;
  for (std::size_t col = 0; col < p.rank && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const long a = rows[rank][col];
      const long b = rows[r][col];
      long g = 0;
      for (std::size_t c = 0; c < p.rank; ++c) {
        rows[r][c] = a * rows[r][c] - b * rows[rank][c];
        g = std::gcd(g, rows[r][c]);
      }
      if (g > 1) {
        for (long& v : rows[r]) v /= g;
      }
    }
    ++rank;
  }
  return p.rank - rank;
}

std::uint64_t count_homs(const GroupPresentation& p, int n, std::uint64_t budget) {
  if (n < 1 || n > 5) {
    throw Error(ErrorCode::IndexOutOfRange,
                "hom counts are supported for S_1..S_5, not S_" + std::to_string(n));
  }
  const SymmetricGroup group(n);

  DisjointSets linked(p.rank);
  std::vector<bool> constrained(p.rank, false);
  for (const auto& r : p.relators) {
    if (r.rank() != p.rank) {
      throw Error(ErrorCode::RankMismatch, "relator rank differs from presentation rank");
    }
    for (int a : r.letters()) {
      const std::size_t g = static_cast<std::size_t>(std::abs(a) - 1);
      constrained[g] = true;
      linked.unite(g, static_cast<std::size_t>(std::abs(r.letters().front()) - 1));
    }
  }

  std::uint64_t total = 1;
  std::uint64_t spent = 0;
  const auto scale = [&](std::uint64_t factor) {
    if (__builtin_mul_overflow(total, factor, &total)) {
      throw Error(ErrorCode::BudgetExceeded, "homomorphism count overflows 64 bits");
    }
  };
  for (std::size_t root = 0; root < p.rank; ++root) {
    if (!constrained[root]) {
      scale(group.order());
      continue;
    }
    if (linked.find(root) != root) continue;
    std::vector<std::size_t> generators;
    for (std::size_t g = 0; g < p.rank; ++g) {
      if (constrained[g] && linked.find(g) == root) generators.push_back(g);
    }
    std::vector<const FreeWord*> relators;
    for (const auto& r : p.relators) {
      if (!r.empty() && linked.find(static_cast<std::size_t>(std::abs(r.letters().front()) - 1)) == root) {
        relators.push_back(&r);
      }
    }
    HomCounter counter(group, budget - spent);
    scale(counter.count(generators, relators));
    spent += counter.visited();
  }
  return total;
}

}  // namespace braid2d
