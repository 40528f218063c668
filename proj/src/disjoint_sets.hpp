#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace cheeger {

// Union-find with path halving. Internal helper.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Keeps the smaller index as representative.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    --sets_;
    return true;
  }

  std::size_t count() const { return sets_; }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::size_t sets_;
};

}  // namespace cheeger
