#include "braid2d/free_word.hpp"

#include <cstdlib>
#include <sstream>

#include "braid2d/error.hpp"

namespace braid2d {

std::vector<int> free_reduce(std::span<const int> letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int a : letters) {
    if (!out.empty() && out.back() == -a) {
      out.pop_back();
    } else {
      out.push_back(a);
    }
  }
  return out;
}

FreeWord::FreeWord(std::size_t rank, std::span<const int> letters) : rank_(rank) {
  for (int a : letters) {
    if (a == 0 || static_cast<std::size_t>(std::abs(a)) > rank) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "free generator " + std::to_string(a) + " outside rank " + std::to_string(rank));
    }
  }
  letters_ = free_reduce(letters);
}

FreeWord FreeWord::generator(std::size_t rank, int j) {
  const int letter[] = {j};
  return FreeWord(rank, letter);
}

FreeWord FreeWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& a : out) a = -a;
  return FreeWord(rank_, out);
}

std::vector<long> FreeWord::exponent_sums() const {
  std::vector<long> sums(rank_, 0);
  for (int a : letters_) sums[std::abs(a) - 1] += a > 0 ? 1 : -1;
  return sums;
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t t = 0; t < letters_.size(); ++t) {
    if (t) os << ' ';
    os << 'x' << std::abs(letters_[t]);
    if (letters_[t] < 0) os << "^-1";
  }
  return os.str();
}

FreeWord operator*(const FreeWord& lhs, const FreeWord& rhs) {
  if (lhs.rank_ != rhs.rank_) {
    throw Error(ErrorCode::RankMismatch, "free words of rank " + std::to_string(lhs.rank_) +
                                             " and " + std::to_string(rhs.rank_));
  }
  std::vector<int> joined = lhs.letters_;
  joined.insert(joined.end(), rhs.letters_.begin(), rhs.letters_.end());
  return FreeWord(lhs.rank_, joined);
}

FreeWord free_reduce(const FreeWord& w) { return w; }

}  // namespace braid2d
