#pragma once

#include <numeric>
#include <vector>

namespace hychrom {

// Plain union-find with path halving; tracks the live component count.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns true when the two elements were in different components.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    --components_;
    return true;
  }

  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  int components_;
};

}  // namespace hychrom
