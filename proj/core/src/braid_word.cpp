#include "braid2d/braid_word.hpp"

#include <cstdlib>
#include <sstream>

#include "braid2d/error.hpp"
#include "braid2d/normal_form.hpp"

namespace braid2d {

namespace {

void check_same_degree(const BraidWord& u, const BraidWord& v) {
  if (u.degree() != v.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "braid words of degree " + std::to_string(u.degree()) +
                                               " and " + std::to_string(v.degree()));
  }
}

// Appends `a` to a freely reduced word, cancelling against its last letter.
inline void push_reduced(std::vector<int>& w, int a) {
  if (!w.empty() && w.back() == -a) {
    w.pop_back();
  } else {
    w.push_back(a);
  }
}

// Appends the image of the free letter `x` under sigma_i^sign.
void push_image(std::vector<int>& out, int x, int i, int sign) {
  const int g = std::abs(x);
  const bool inv = x < 0;
  if (g != i && g != i + 1) {
    push_reduced(out, x);
    return;
  }
  // Images of x_i and x_{i+1}; a three-letter image is written c g c^-1.
  if (sign > 0) {
    if (g == i + 1) {
      push_reduced(out, inv ? -i : i);
    } else {
      push_reduced(out, i);
      push_reduced(out, inv ? -(i + 1) : i + 1);
      push_reduced(out, -i);
    }
  } else {
    if (g == i) {
      push_reduced(out, inv ? -(i + 1) : i + 1);
    } else {
      push_reduced(out, -(i + 1));
      push_reduced(out, inv ? -i : i);
      push_reduced(out, i + 1);
    }
  }
}

}  // namespace

BraidWord::BraidWord(std::size_t degree, std::vector<int> letters)
    : degree_(degree), letters_(std::move(letters)) {
  if (degree_ == 0) throw Error(ErrorCode::IndexOutOfRange, "braid degree must be positive");
  for (int a : letters_) {
    if (a == 0 || static_cast<std::size_t>(std::abs(a)) >= degree_) {
      throw Error(ErrorCode::IndexOutOfRange, "letter " + std::to_string(a) +
                                                  " is not a generator of B_" +
                                                  std::to_string(degree_));
    }
  }
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  for (std::size_t t = 0; t < letters_.size(); ++t) {
    if (t) os << ',';
    os << letters_[t];
  }
  return os.str();
}

BraidWord free_reduce(const BraidWord& w) {
  return BraidWord(w.degree(), free_reduce(std::span<const int>(w.letters())));
}

BraidWord multiply(const BraidWord& u, const BraidWord& v) {
  check_same_degree(u, v);
  std::vector<int> out = free_reduce(std::span<const int>(u.letters()));
  for (int a : v.letters()) push_reduced(out, a);
  return BraidWord(u.degree(), std::move(out));
}

BraidWord inverse(const BraidWord& u) {
  std::vector<int> out(u.letters().rbegin(), u.letters().rend());
  for (int& a : out) a = -a;
  return BraidWord(u.degree(), std::move(out));
}

Permutation permutation_of(const BraidWord& u) {
  Permutation p(u.degree());
  for (int a : u.letters()) p.swap_values(std::abs(a));
  return p;
}

FreeWord artin_act(const BraidWord& u, const FreeWord& x) {
  if (u.degree() != x.rank()) {
    throw Error(ErrorCode::RankMismatch, "braid of degree " + std::to_string(u.degree()) +
                                             " acting on free group of rank " +
                                             std::to_string(x.rank()));
  }
  std::vector<int> current = x.letters();
  std::vector<int> next;
  for (int a : u.letters()) {
    next.clear();
    next.reserve(current.size() + 4);
    const int i = std::abs(a);
    const int sign = a > 0 ? 1 : -1;
    for (int letter : current) push_image(next, letter, i, sign);
    current.swap(next);
  }
  return FreeWord(x.rank(), current);
}

BraidWord band_generator(const BraidWord& w, int i, int e) {
  if (i < 1 || static_cast<std::size_t>(i) >= w.degree()) {
    throw Error(ErrorCode::IndexOutOfRange, "band index " + std::to_string(i) +
                                                " outside 1.." + std::to_string(w.degree() - 1));
  }
  std::vector<int> out = free_reduce(std::span<const int>(w.letters()));
  push_reduced(out, e > 0 ? i : -i);
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) push_reduced(out, -*it);
  return BraidWord(w.degree(), std::move(out));
}

bool equal(const BraidWord& u, const BraidWord& v) {
  check_same_degree(u, v);
  if (permutation_of(u) != permutation_of(v)) return false;
  return normal_form(u) == normal_form(v);
}

bool is_identity(const BraidWord& u) {
  return permutation_of(u).is_identity() && normal_form(u) == NormalForm{u.degree(), 0, {}};
}

}  // namespace braid2d
