#pragma once

#include <cstddef>
#include <vector>

namespace rankcorr {

/// Binary indexed tree over [0, n) with point add and prefix sum.
template <typename T>
class FenwickTree {
 public:
  explicit FenwickTree(std::size_t n = 0) : tree_(n + 1, T{}) {}

  void reset(std::size_t n) { tree_.assign(n + 1, T{}); }

  [[nodiscard]] std::size_t size() const noexcept { return tree_.size() - 1; }

  void add(std::size_t index, T value) {
    for (std::size_t i = index + 1; i < tree_.size(); i += i & (~i + 1)) tree_[i] += value;
  }

  /// Sum over [0, end).
  [[nodiscard]] T prefix(std::size_t end) const {
    T sum{};
    for (std::size_t i = end; i > 0; i -= i & (~i + 1)) sum += tree_[i];
    return sum;
  }

 private:
  std::vector<T> tree_;
};

}  // namespace rankcorr
