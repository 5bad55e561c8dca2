#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace wsg {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0) { reset(n); }

  void reset(std::size_t n) {
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), 0);
    size_.assign(n, 1);
    components_ = static_cast<int>(n);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    return true;
  }

  int components() const { return components_; }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_ = 0;
};

}  // namespace wsg
