#pragma once

#include <compare>
#include <initializer_list>
#include <vector>

namespace formbounds {

// Strictly increasing tuple of 1-based coordinate indices; the key type for
// form coefficients. Unsorted input is rejected rather than canonicalized so
// that all sign bookkeeping lives in the algebra operations.
class MultiIndex {
 public:
  MultiIndex() = default;  // grade 0
  MultiIndex(std::initializer_list<int> indices);
  explicit MultiIndex(std::vector<int> indices);

  int grade() const { return static_cast<int>(indices_.size()); }
  const std::vector<int>& indices() const { return indices_; }
  int operator[](int k) const { return indices_[static_cast<std::size_t>(k)]; }

  bool contains(int index) const;
  int max_index() const;  // 0 for grade 0

  // Copy with the k-th entry removed (0-based position).
  MultiIndex erased(int position) const;
  // Copy with `index` inserted at its sorted position; index must be absent.
  MultiIndex inserted(int index) const;
  // Indices of [1, dim] not present here, in increasing order.
  MultiIndex complement(int dim) const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  void check_strictly_increasing() const;

  std::vector<int> indices_;
};

}  // namespace formbounds
