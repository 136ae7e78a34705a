#include "braid2d/normal_form.hpp"

#include <cstdlib>
#include <sstream>

namespace braid2d {

namespace {

bool in_starting_set(const Permutation& p, int i) { return p(i) > p(i + 1); }

// Moves generators from the front of `right` to the back of `left` until
// every generator starting `right` already finishes `left`.
bool left_weight(Permutation& left, Permutation& right) {
  bool changed = false;
  const int m = static_cast<int>(left.degree());
  for (;;) {
    const Permutation left_inv = left.inverse();
    int move = 0;
    for (int i = 1; i < m; ++i) {
      if (in_starting_set(right, i) && !in_starting_set(left_inv, i)) {
        move = i;
        break;
      }
    }
    if (move == 0) return changed;
    left.swap_values(move);
    right.swap_positions(move);
    changed = true;
  }
}

Permutation flip(const Permutation& p, const Permutation& delta) {
  return delta.then(p).then(delta);
}

}  // namespace

std::string NormalForm::to_string() const {
  std::ostringstream os;
  os << "D^" << infimum;
  for (const auto& f : factors) {
    os << " [";
    const auto im = f.images();
    for (std::size_t t = 0; t < im.size(); ++t) {
      if (t) os << ',';
      os << im[t];
    }
    os << ']';
  }
  return os.str();
}

std::vector<int> starting_set(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < static_cast<int>(p.degree()); ++i) {
    if (in_starting_set(p, i)) out.push_back(i);
  }
  return out;
}

std::vector<int> finishing_set(const Permutation& p) { return starting_set(p.inverse()); }

NormalForm normal_form(const BraidWord& u) {
  const std::size_t m = u.degree();
  NormalForm nf{m, 0, {}};
  if (m == 1) return nf;
  const Permutation delta = Permutation::reversal(m);

  // sigma_i^-1 = Delta^-1 (Delta sigma_i^-1), and pulling Delta^-1 leftwards
  // past a simple factor A turns it into Delta A Delta^-1. Only the parity of
  // the number of later negative letters matters.
  const auto& letters = u.letters();
  std::size_t negatives_after = 0;
  for (int a : letters) negatives_after += a < 0;

  std::vector<Permutation> factors;
  factors.reserve(letters.size());
  for (int a : letters) {
    Permutation f = a > 0 ? Permutation::transposition(m, a)
                          : delta.then(Permutation::transposition(m, -a));
    if (a < 0) {
      --nf.infimum;
      --negatives_after;
    }
    factors.push_back(negatives_after % 2 ? flip(f, delta) : std::move(f));
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < factors.size(); ++j) {
      if (left_weight(factors[j], factors[j + 1])) changed = true;
    }
  }

  std::size_t first = 0;
  while (first < factors.size() && factors[first] == delta) {
    ++nf.infimum;
    ++first;
  }
  std::size_t last = factors.size();
  while (last > first && factors[last - 1].is_identity()) --last;
  nf.factors.assign(factors.begin() + static_cast<std::ptrdiff_t>(first),
                    factors.begin() + static_cast<std::ptrdiff_t>(last));
  return nf;
}

BraidWord permutation_braid(const Permutation& p) {
  Permutation rest = p;
  std::vector<int> letters;
  const int m = static_cast<int>(p.degree());
  for (bool found = true; found;) {
    found = false;
    for (int i = 1; i < m; ++i) {
      if (in_starting_set(rest, i)) {
        letters.push_back(i);
        rest.swap_positions(i);
        found = true;
        break;
      }
    }
  }
  return BraidWord(p.degree(), std::move(letters));
}

BraidWord half_twist(std::size_t degree) {
  return permutation_braid(Permutation::reversal(degree));
}

BraidWord to_word(const NormalForm& nf) {
  const BraidWord delta = half_twist(nf.degree);
  const BraidWord step = nf.infimum >= 0 ? delta : inverse(delta);
  std::vector<int> letters;
  for (long t = 0; t < std::labs(nf.infimum); ++t) {
    letters.insert(letters.end(), step.letters().begin(), step.letters().end());
  }
  for (const auto& f : nf.factors) {
    const BraidWord w = permutation_braid(f);
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  }
  return BraidWord(nf.degree, std::move(letters));
}

}  // namespace braid2d
