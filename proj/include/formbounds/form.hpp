#pragma once

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "formbounds/multi_index.hpp"

namespace formbounds {

// Zero element of the coefficient ring; specialized per ring because some
// rings (polynomials) carry the ambient dimension.
template <class C>
C zero_coefficient(int dim);

template <>
inline double zero_coefficient<double>(int) {
  return 0.0;
}

inline bool coefficient_is_zero(double c) { return c == 0.0; }

namespace detail {

// Parity sign of merging two sorted index tuples, 0 if they share an index.
inline int merge_sign(const std::vector<int>& a, const std::vector<int>& b) {
  int inversions = 0;
  std::size_t i = 0;
  for (int jb : b) {
    while (i < a.size() && a[i] < jb) ++i;
    if (i < a.size() && a[i] == jb) return 0;
    inversions += static_cast<int>(a.size() - i);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

// Sign of dx_j ^ dx_I relative to the sorted result; j must not occur in I.
inline int insertion_sign(int j, const MultiIndex& idx) {
  int passed = 0;
  for (int i : idx.indices()) {
    if (i < j) ++passed;
  }
  return (passed % 2 == 0) ? 1 : -1;
}

// Sign of the permutation sorting (I, I^c) into (1, ..., n). Counts pairs
// (i in I, c in I^c) with i > c.
inline int hodge_sign(const MultiIndex& idx, int dim) {
  int inversions = 0;
  int seen = 0;
  for (int c = 1; c <= dim; ++c) {
    if (idx.contains(c)) {
      ++seen;
    } else {
      inversions += idx.grade() - seen;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace detail

// Grade-l alternating tensor over R^n with sparse coefficients in the ring C.
// Absent keys are zero; exact zeros are never stored.
template <class C>
class BasicForm {
 public:
  BasicForm(int dim, int grade) : dim_(dim), grade_(grade) {
    if (dim < 2) throw std::invalid_argument("form dimension must be >= 2");
    if (grade < 0 || grade > dim) {
      throw std::invalid_argument("form grade must lie in [0, dim]");
    }
  }

  static BasicForm zero(int dim, int grade) { return BasicForm(dim, grade); }

  static BasicForm basis(int dim, const MultiIndex& idx, C coeff) {
    BasicForm f(dim, idx.grade());
    f.add(idx, std::move(coeff));
    return f;
  }

  int dim() const { return dim_; }
  int grade() const { return grade_; }
  bool is_zero() const { return coeffs_.empty(); }

  const std::map<MultiIndex, C>& coefficients() const { return coeffs_; }

  C coefficient(const MultiIndex& idx) const {
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) return zero_coefficient<C>(dim_);
    return it->second;
  }

  // Accumulates into the stored coefficient and drops exact zeros.
  void add(const MultiIndex& idx, const C& value) {
    if (idx.grade() != grade_) {
      throw std::invalid_argument("multi-index grade does not match form grade");
    }
    if (idx.max_index() > dim_) {
      throw std::invalid_argument("multi-index entry exceeds form dimension");
    }
    if (coefficient_is_zero(value)) return;
    auto [it, inserted] = coeffs_.emplace(idx, value);
    if (!inserted) {
      it->second += value;
      if (coefficient_is_zero(it->second)) coeffs_.erase(it);
    }
  }

  BasicForm& operator+=(const BasicForm& o) {
    require_same_shape(o);
    for (const auto& [idx, c] : o.coeffs_) add(idx, c);
    return *this;
  }

  BasicForm& operator-=(const BasicForm& o) {
    require_same_shape(o);
    for (const auto& [idx, c] : o.coeffs_) add(idx, -c);
    return *this;
  }

  friend BasicForm operator+(BasicForm a, const BasicForm& b) { return a += b; }
  friend BasicForm operator-(BasicForm a, const BasicForm& b) { return a -= b; }

  BasicForm operator-() const {
    BasicForm out(dim_, grade_);
    for (const auto& [idx, c] : coeffs_) out.coeffs_.emplace(idx, -c);
    return out;
  }

  friend bool operator==(const BasicForm& a, const BasicForm& b) {
    return a.dim_ == b.dim_ && a.grade_ == b.grade_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void require_same_shape(const BasicForm& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("form dimension mismatch");
    if (grade_ != o.grade_) throw std::invalid_argument("form grade mismatch");
  }

  int dim_;
  int grade_;
  std::map<MultiIndex, C> coeffs_;
};

using Form = BasicForm<double>;

// Pointwise scaling by a ring element.
template <class C>
BasicForm<C> scaled(const BasicForm<C>& f, const C& factor) {
  BasicForm<C> out(f.dim(), f.grade());
  for (const auto& [idx, c] : f.coefficients()) out.add(idx, factor * c);
  return out;
}

// Alternating product. Grades above the ambient dimension vanish, so the
// result is the zero n-form when k + m > n.
template <class C>
BasicForm<C> wedge(const BasicForm<C>& a, const BasicForm<C>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("form dimension mismatch");
  const int n = a.dim();
  const int grade = a.grade() + b.grade();
  if (grade > n) return BasicForm<C>::zero(n, n);
  BasicForm<C> out(n, grade);
  for (const auto& [ia, ca] : a.coefficients()) {
    for (const auto& [ib, cb] : b.coefficients()) {
      int sign = detail::merge_sign(ia.indices(), ib.indices());
      if (sign == 0) continue;
      std::vector<int> merged;
      merged.reserve(ia.indices().size() + ib.indices().size());
      std::merge(ia.indices().begin(), ia.indices().end(), ib.indices().begin(),
                 ib.indices().end(), std::back_inserter(merged));
      C prod = ca * cb;
      if (sign < 0) prod = -prod;
      out.add(MultiIndex(std::move(merged)), prod);
    }
  }
  return out;
}

// Interior product of the grade-l form v with the 1-form a:
// a . v = sum_I v_I sum_k (-1)^{k-1} a_{i_k} dx_{I \ i_k}.
template <class C>
BasicForm<C> contract(const BasicForm<C>& a, const BasicForm<C>& v) {
  if (a.dim() != v.dim()) throw std::invalid_argument("form dimension mismatch");
  if (a.grade() != 1) throw std::invalid_argument("contraction requires a 1-form");
  if (v.grade() < 1) {
    throw std::invalid_argument("contraction of a grade-0 form is undefined");
  }
  BasicForm<C> out(v.dim(), v.grade() - 1);
  for (const auto& [idx, cv] : v.coefficients()) {
    for (int k = 0; k < idx.grade(); ++k) {
      C ca = a.coefficient(MultiIndex{idx[k]});
      if (coefficient_is_zero(ca)) continue;
      C term = ca * cv;
      if (k % 2 == 1) term = -term;
      out.add(idx.erased(k), term);
    }
  }
  return out;
}

// Euclidean inner product on each grade: sum over multi-indices of
// coefficient products.
template <class C>
C inner(const BasicForm<C>& a, const BasicForm<C>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("form dimension mismatch");
  if (a.grade() != b.grade()) throw std::invalid_argument("form grade mismatch");
  C acc = zero_coefficient<C>(a.dim());
  const auto& bc = b.coefficients();
  for (const auto& [idx, ca] : a.coefficients()) {
    auto it = bc.find(idx);
    if (it != bc.end()) acc += ca * it->second;
  }
  return acc;
}

// Hodge dual: star(dx_I) = sign(I, I^c) dx_{I^c}, Euclidean signature.
template <class C>
BasicForm<C> hodge_star(const BasicForm<C>& v) {
  const int n = v.dim();
  BasicForm<C> out(n, n - v.grade());
  for (const auto& [idx, c] : v.coefficients()) {
    int sign = detail::hodge_sign(idx, n);
    out.add(idx.complement(n), sign < 0 ? -c : c);
  }
  return out;
}

}  // namespace formbounds
