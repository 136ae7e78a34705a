#include "braid2d/monodromy_tuple.hpp"

#include <cstdlib>
#include <string>

#include "braid2d/normal_form.hpp"

namespace braid2d {

namespace {

std::vector<int> shift_letters(const std::vector<int>& letters, int by) {
  std::vector<int> out(letters);
  for (int& a : out) a += a > 0 ? by : -by;
  return out;
}

BraidWord product_of(std::size_t degree, const std::vector<BandEntry>& entries) {
  std::vector<int> letters;
  for (const auto& e : entries) {
    const BraidWord w = e.expand();
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  }
  return free_reduce(BraidWord(degree, std::move(letters)));
}

std::optional<Error> check_product(std::size_t degree, const std::vector<BandEntry>& entries) {
  const BraidWord total = product_of(degree, entries);
  if (!is_identity(total)) {
    return Error(ErrorCode::BoundaryNotTrivial,
                 "product of the " + std::to_string(entries.size()) +
                     " entries is not the identity (reduced product: " +
                     (total.empty() ? std::string("empty") : total.to_string()) + ")");
  }
  return std::nullopt;
}

Error at_entry(const Error& e, std::size_t entry) {
  return Error(e.code(), "entry " + std::to_string(entry + 1) + ": " + e.message(), entry);
}

}  // namespace

BandEntry::BandEntry(BraidWord conjugator, int index, int exponent)
    : conjugator_(std::move(conjugator)), index_(index), exponent_(exponent) {
  if (exponent != 1 && exponent != -1) {
    throw Error(ErrorCode::NonSimpleEntry,
                "exponent " + std::to_string(exponent) + " is not +1 or -1");
  }
  if (index < 1 || static_cast<std::size_t>(index) >= conjugator_.degree()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "band index " + std::to_string(index) + " outside 1.." +
                    std::to_string(static_cast<long>(conjugator_.degree()) - 1));
  }
  std::vector<int> w = free_reduce(std::span<const int>(conjugator_.letters()));
  while (!w.empty() && std::abs(w.back()) == index) w.pop_back();
  conjugator_ = BraidWord(conjugator_.degree(), std::move(w));
}

BraidWord BandEntry::expand() const {
  std::vector<int> letters;
  letters.reserve(2 * conjugator_.size() + 1);
  letters = conjugator_.letters();
  letters.push_back(exponent_ * index_);
  for (auto it = conjugator_.letters().rbegin(); it != conjugator_.letters().rend(); ++it) {
    letters.push_back(-*it);
  }
  return BraidWord(degree(), std::move(letters));
}

Permutation BandEntry::permutation() const { return permutation_of(expand()); }

MonodromyTuple::MonodromyTuple(std::size_t degree, std::vector<BandEntry> entries)
    : degree_(degree), entries_(std::move(entries)) {
  if (degree_ == 0) throw Error(ErrorCode::IndexOutOfRange, "degree must be positive");
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (entries_[j].degree() != degree_) {
      throw Error(ErrorCode::DegreeMismatch,
                  "entry " + std::to_string(j + 1) + " has degree " +
                      std::to_string(entries_[j].degree()) + ", tuple has degree " +
                      std::to_string(degree_),
                  j);
    }
  }
  if (auto err = check_product(degree_, entries_)) throw *err;
}

MonodromyTuple MonodromyTuple::from_specs(std::size_t degree, std::span<const EntrySpec> specs) {
  if (auto err = validate(degree, specs)) throw *err;
  std::vector<BandEntry> entries;
  entries.reserve(specs.size());
  for (const auto& s : specs) entries.emplace_back(BraidWord(degree, s.conjugator), s.index, s.exponent);
  return MonodromyTuple(degree, std::move(entries), Unchecked{});
}

MonodromyTuple MonodromyTuple::empty(std::size_t degree) { return MonodromyTuple(degree, {}); }

BraidWord MonodromyTuple::total_product() const { return product_of(degree_, entries_); }

std::size_t MonodromyTuple::max_conjugator_length() const noexcept {
  std::size_t longest = 0;
  for (const auto& e : entries_) longest = std::max(longest, e.conjugator().size());
  return longest;
}

std::vector<EntrySpec> MonodromyTuple::specs() const {
  std::vector<EntrySpec> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back({e.conjugator().letters(), e.index(), e.exponent()});
  return out;
}

std::optional<Error> validate(std::size_t degree, std::span<const EntrySpec> specs) {
  if (degree == 0) return Error(ErrorCode::IndexOutOfRange, "degree must be positive");
  std::vector<BandEntry> entries;
  entries.reserve(specs.size());
  for (std::size_t j = 0; j < specs.size(); ++j) {
    try {
      entries.emplace_back(BraidWord(degree, specs[j].conjugator), specs[j].index,
                           specs[j].exponent);
    } catch (const Error& e) {
      return at_entry(e, j);
    }
  }
  return check_product(degree, entries);
}

std::optional<Error> validate(const MonodromyTuple& t) {
  try {
    MonodromyTuple copy(t.degree(), t.entries());
  } catch (const Error& e) {
    return e;
  }
  return std::nullopt;
}

MonodromyTuple braid_sum(const MonodromyTuple& t, const MonodromyTuple& u) {
  if (t.degree() != u.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "braid sum of degrees " + std::to_string(t.degree()) +
                                               " and " + std::to_string(u.degree()));
  }
  std::vector<BandEntry> entries = t.entries();
  entries.insert(entries.end(), u.entries().begin(), u.entries().end());
  return MonodromyTuple(t.degree(), std::move(entries), MonodromyTuple::Unchecked{});
}

MonodromyTuple conjugate(const MonodromyTuple& t, const BraidWord& b) {
  if (b.degree() != t.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "conjugating braid has degree " +
                                               std::to_string(b.degree()) + ", tuple has degree " +
                                               std::to_string(t.degree()));
  }
  std::vector<BandEntry> entries;
  entries.reserve(t.branch_count());
  for (const auto& e : t.entries()) {
    entries.emplace_back(multiply(b, e.conjugator()), e.index(), e.exponent());
  }
  return MonodromyTuple(t.degree(), std::move(entries), MonodromyTuple::Unchecked{});
}

MonodromyTuple iota(const MonodromyTuple& t, std::size_t below, std::size_t above) {
  const std::size_t degree = t.degree() + below + above;
  const int shift = static_cast<int>(below);
  std::vector<BandEntry> entries;
  entries.reserve(t.branch_count());
  for (const auto& e : t.entries()) {
    entries.emplace_back(BraidWord(degree, shift_letters(e.conjugator().letters(), shift)),
                         e.index() + shift, e.exponent());
  }
  return MonodromyTuple(degree, std::move(entries), MonodromyTuple::Unchecked{});
}

MonodromyTuple b_star() {
  std::vector<BandEntry> entries{BandEntry(BraidWord(2), 1, 1), BandEntry(BraidWord(2), 1, -1)};
  return MonodromyTuple(2, std::move(entries), MonodromyTuple::Unchecked{});
}

MonodromyTuple stabilize(const MonodromyTuple& t) {
  return braid_sum(iota(t, 0, 1), iota(b_star(), t.degree() - 1, 0));
}

std::optional<MonodromyTuple> destabilize(const MonodromyTuple& t) {
  const std::size_t k = t.branch_count();
  if (t.degree() < 2 || k < 2) return std::nullopt;
  const int top = static_cast<int>(t.degree()) - 1;
  const auto& last = t.entries()[k - 1];
  const auto& prev = t.entries()[k - 2];
  const auto is_top_band = [top](const BandEntry& e) {
    return e.conjugator().empty() && e.index() == top;
  };
  if (!is_top_band(last) || !is_top_band(prev) || last.exponent() != -prev.exponent()) {
    return std::nullopt;
  }
  std::vector<BandEntry> entries;
  entries.reserve(k - 2);
  const std::size_t degree = t.degree() - 1;
  for (std::size_t j = 0; j + 2 < k; ++j) {
    const auto& e = t.entries()[j];
    // Stored conjugators never cancel in the expansion, so the expansion
    // avoids +-top exactly when the conjugator and the index do.
    if (e.index() == top) return std::nullopt;
    for (int a : e.conjugator().letters()) {
      if (std::abs(a) == top) return std::nullopt;
    }
    entries.emplace_back(BraidWord(degree, e.conjugator().letters()), e.index(), e.exponent());
  }
  return MonodromyTuple(degree, std::move(entries), MonodromyTuple::Unchecked{});
}

MonodromyTuple hurwitz(const MonodromyTuple& t, std::size_t position, HurwitzDirection dir) {
  const std::size_t k = t.branch_count();
  if (position < 1 || position >= k) {
    throw Error(ErrorCode::PositionOutOfRange, "Hurwitz position " + std::to_string(position) +
                                                   " outside 1.." +
                                                   std::to_string(k > 0 ? k - 1 : 0));
  }
  std::vector<BandEntry> entries = t.entries();
  const BandEntry a = entries[position - 1];
  const BandEntry b = entries[position];
  if (dir == HurwitzDirection::Forward) {
    entries[position - 1] = BandEntry(multiply(a.expand(), b.conjugator()), b.index(), b.exponent());
    entries[position] = a;
  } else {
    entries[position - 1] = b;
    entries[position] =
        BandEntry(multiply(inverse(b.expand()), a.conjugator()), a.index(), a.exponent());
  }
  return MonodromyTuple(t.degree(), std::move(entries), MonodromyTuple::Unchecked{});
}

}  // namespace braid2d
