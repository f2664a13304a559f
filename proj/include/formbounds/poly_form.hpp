#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>

#include "formbounds/form.hpp"
#include "formbounds/poly.hpp"

namespace formbounds {

template <>
inline Poly zero_coefficient<Poly>(int dim) {
  return Poly(dim);
}

inline bool coefficient_is_zero(const Poly& p) { return p.is_zero(); }

// Differential form with exact polynomial coefficients.
using PolyForm = BasicForm<Poly>;

// Exterior derivative: sum_I sum_j (d f_I / d x_j) dx_j ^ dx_I. Returns the
// zero n-form for top-grade input.
PolyForm d(const PolyForm& f);

// Coderivative, the formal adjoint of d. Implemented as
// (-1)^{n(l+1)+1} star d star; at l = 2 this agrees coefficient-wise with the
// componentwise divergence formula sum_i (sum_j d_j v_ij) dx_i.
PolyForm dstar(const PolyForm& f);

// Hodge-Laplacian d* d + d d*. Positive convention: on functions it equals
// minus the sum of second derivatives, so harmonic means laplacian == 0.
PolyForm laplacian(const PolyForm& f);

// |f|^2 pointwise: the sum of squared coefficient polynomials.
Poly norm_squared(const PolyForm& f);

// For a 2-form v with antisymmetric matrix V (V_ij = v_ij for i < j), the
// 1-form whose i-th component is sum_k d_k (V V)_ik.
PolyForm div_vv(const PolyForm& v);

// d*(2uv) - d(u^2) - d(|v|^2) - 2 div(v.v) for a scalar u and 2-form v.
// Identically zero whenever (u, v) is a conjugate pair.
PolyForm payne_residual(const PolyForm& u, const PolyForm& v);

// (Re z^k, Im z^k) in the (i, j) coordinate plane, z = x_i + i x_j.
// Integer coefficients; the pair solves the Cauchy-Riemann system in that
// plane and is constant in all other variables.
std::pair<Poly, Poly> plane_harmonic_pair(int dim, int i, int j, int k);

// True iff d(u) == dstar(v), d(v) == 0 and laplacian(u) == 0, exactly.
bool is_conjugate(const PolyForm& u, const PolyForm& v);

// Scalar u and 2-form v with du = d*v, dv = 0 and u harmonic; the relations
// are verified exactly at construction.
class ConjugatePair {
 public:
  static ConjugatePair create(PolyForm u, PolyForm v);

  const PolyForm& u() const { return u_; }
  const PolyForm& v() const { return v_; }
  int dim() const { return u_.dim(); }

 private:
  ConjugatePair(PolyForm u, PolyForm v) : u_(std::move(u)), v_(std::move(v)) {}

  PolyForm u_;
  PolyForm v_;
};

// Random rational combination of plane-analytic monomial pairs
// (Re z^k, Im z^k dx_i ^ dx_j) over coordinate planes, degree <= max_degree.
// Deterministic per seed; the result satisfies the conjugacy relations
// exactly by construction.
ConjugatePair generate_conjugate_pair(int dim, int max_degree, std::uint64_t seed);

PolyForm payne_residual(const ConjugatePair& pair);

std::ostream& operator<<(std::ostream& os, const PolyForm& f);

}  // namespace formbounds
