#include "okforce/vertex_set.hpp"

#include <algorithm>
#include <bit>

#include "okforce/errors.hpp"

namespace okf {

VertexSet::VertexSet(int universe) : n_(universe) {
  if (universe < 0) throw ParameterError("vertex set universe must be non-negative");
  words_.assign(static_cast<std::size_t>((universe + 63) / 64), 0);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (int v = 0; v < universe; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::from_list(int universe, std::span<const int> members) {
  VertexSet s(universe);
  for (int v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::from_list(int universe, std::initializer_list<int> members) {
  return from_list(universe, std::span<const int>(members.begin(), members.size()));
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) throw ParameterError("from_mask needs a universe of at most 64");
  if (universe < 64 && (mask >> universe) != 0) throw ParameterError("mask has bits beyond the universe");
  VertexSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

int VertexSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void VertexSet::check_member(int v) const {
  if (v < 0 || v >= n_) {
    throw ParameterError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
  }
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (other.n_ != n_) throw ParameterError("vertex sets over different universes");
}

bool VertexSet::contains(int v) const {
  if (v < 0 || v >= n_) return false;
  return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(int v) {
  check_member(v);
  words_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(int v) {
  check_member(v);
  words_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::uint64_t VertexSet::mask() const {
  if (n_ > 64) throw LimitError("VertexSet::mask needs a universe of at most 64");
  return words_.empty() ? 0 : words_[0];
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each([&](int v) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  });
  return s + "}";
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace okf
