#include "braid2d/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace braid2d {

Permutation::Permutation(std::size_t degree) : image_(degree) {
  std::iota(image_.begin(), image_.end(), 0);
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  Permutation p(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t x = 0; x < images.size(); ++x) {
    const int y = images[x] - 1;
    if (y < 0 || static_cast<std::size_t>(y) >= images.size() || seen[y]) {
      throw std::invalid_argument("Permutation: images are not a bijection");
    }
    seen[y] = true;
    p.image_[x] = y;
  }
  return p;
}

Permutation Permutation::transposition(std::size_t degree, int i) {
  Permutation p(degree);
  p.swap_positions(i);
  return p;
}

Permutation Permutation::reversal(std::size_t degree) {
  Permutation p(degree);
  for (std::size_t x = 0; x < degree; ++x) p.image_[x] = static_cast<int>(degree - 1 - x);
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  Permutation out(degree());
  for (std::size_t x = 0; x < image_.size(); ++x) out.image_[x] = next.image_[image_[x]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(degree());
  for (std::size_t x = 0; x < image_.size(); ++x) out.image_[image_[x]] = static_cast<int>(x);
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (image_[x] != static_cast<int>(x)) return false;
  }
  return true;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(image_.size());
  for (std::size_t x = 0; x < image_.size(); ++x) out[x] = image_[x] + 1;
  return out;
}

std::string Permutation::cycles() const {
  std::ostringstream os;
  std::vector<bool> done(image_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (done[start] || image_[start] == static_cast<int>(start)) continue;
    any = true;
    os << '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) os << ' ';
      os << x + 1;
      first = false;
      x = static_cast<std::size_t>(image_[x]);
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

void Permutation::swap_positions(int i) noexcept { std::swap(image_[i - 1], image_[i]); }

void Permutation::swap_values(int i) noexcept {
  for (int& y : image_) {
    if (y == i - 1) {
      y = i;
    } else if (y == i) {
      y = i - 1;
    }
  }
}

std::size_t Permutation::inversions() const noexcept {
  std::size_t count = 0;
  for (std::size_t a = 0; a < image_.size(); ++a) {
    for (std::size_t b = a + 1; b < image_.size(); ++b) {
      if (image_[a] > image_[b]) ++count;
    }
  }
  return count;
}

}  // namespace braid2d
