#include "formbounds/multi_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace formbounds {

MultiIndex::MultiIndex(std::initializer_list<int> indices)
    : indices_(indices) {
  check_strictly_increasing();
}

MultiIndex::MultiIndex(std::vector<int> indices) : indices_(std::move(indices)) {
  check_strictly_increasing();
}

void MultiIndex::check_strictly_increasing() const {
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] < 1) {
      throw std::invalid_argument("multi-index entries must be >= 1");
    }
    if (k > 0 && indices_[k] <= indices_[k - 1]) {
      throw std::invalid_argument("multi-index must be strictly increasing");
    }
  }
}

bool MultiIndex::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

int MultiIndex::max_index() const {
  return indices_.empty() ? 0 : indices_.back();
}

MultiIndex MultiIndex::erased(int position) const {
  std::vector<int> out = indices_;
  out.erase(out.begin() + position);
  MultiIndex m;
  m.indices_ = std::move(out);
  return m;
}

MultiIndex MultiIndex::inserted(int index) const {
  std::vector<int> out = indices_;
  out.insert(std::lower_bound(out.begin(), out.end(), index), index);
  MultiIndex m;
  m.indices_ = std::move(out);
  return m;
}

MultiIndex MultiIndex::complement(int dim) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(dim) - indices_.size());
  for (int i = 1; i <= dim; ++i) {
    if (!contains(i)) out.push_back(i);
  }
  MultiIndex m;
  m.indices_ = std::move(out);
  return m;
}

}  // namespace formbounds
