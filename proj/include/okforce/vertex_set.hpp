#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace okf {

// Subset of {0, ..., universe-1}, stored as a packed bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  static VertexSet full(int universe);
  static VertexSet from_list(int universe, std::span<const int> members);
  static VertexSet from_list(int universe, std::initializer_list<int> members);
  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const { return n_; }
  int count() const;
  bool empty() const;

  bool contains(int v) const;
  void insert(int v);
  void erase(int v);

  std::vector<int> members() const;
  // Requires universe() <= 64.
  std::uint64_t mask() const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  // "{0,3,5}"
  std::string to_string() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        f(static_cast<int>(w * 64) + b);
      }
    }
  }

 private:
  void check_member(int v) const;
  void check_same_universe(const VertexSet& other) const;

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Lexicographic order on the sorted member lists.
bool lex_less(const VertexSet& a, const VertexSet& b);

}  // namespace okf
