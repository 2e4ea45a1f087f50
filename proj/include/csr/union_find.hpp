#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace csr {

// Disjoint sets over {0, ..., n-1}. The root of every set is its least
// member, which keeps class representatives deterministic.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    sets_ = n;
  }

  std::size_t size() const noexcept { return parent_.size(); }
  std::size_t number_of_sets() const noexcept { return sets_; }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) {
      root = parent_[root];
    }
    while (parent_[x] != root) {
      std::size_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  // Returns true if x and y were in different sets.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    if (y < x) {
      std::swap(x, y);
    }
    parent_[y] = x;
    --sets_;
    return true;
  }

  bool same(std::size_t x, std::size_t y) { return find(x) == find(y); }

 private:
  std::vector<std::size_t> parent_;
  std::size_t sets_ = 0;
};

}  // namespace csr
