#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>

namespace formbounds {

class NotPositiveDefiniteError : public std::runtime_error {
 public:
  NotPositiveDefiniteError(int pivot_index, double pivot);
  int pivot_index() const { return pivot_index_; }
  double pivot() const { return pivot_; }

 private:
  int pivot_index_;
  double pivot_;
};

// Dense symmetric matrix. Construction symmetrizes inputs whose asymmetry
// stays below tol (relative to the largest absolute entry) and rejects
// anything above it.
class SymMatrix {
 public:
  explicit SymMatrix(Eigen::MatrixXd m, double tol = 1e-12);

  int order() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  Eigen::MatrixXd m_;
};

struct GaussLegendreRule {
  Eigen::VectorXd nodes;    // ascending in (-1, 1)
  Eigen::VectorXd weights;  // sum to 2
};

// m-point rule on [-1, 1], exact for polynomials of degree <= 2m - 1.
GaussLegendreRule gauss_legendre(int point_count);

// Lower Cholesky factor. A pivot at or below min_pivot_rel times the largest
// diagonal entry raises NotPositiveDefiniteError with the pivot index.
Eigen::MatrixXd cholesky(const SymMatrix& b, double min_pivot_rel = 0.0);

struct SymEigenResult {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // orthonormal columns, matching order
};

SymEigenResult sym_eigen(const SymMatrix& a);

struct GenEigenMaxResult {
  double value;
  Eigen::VectorXd vector;  // eigenvector in the original coordinates
};

// Largest lambda of A x = lambda B x for symmetric A and positive definite B,
// via the Cholesky reduction L^{-1} A L^{-T}.
GenEigenMaxResult gen_sym_eigen_max_vector(const SymMatrix& a, const SymMatrix& b,
                                           double min_pivot_rel = 0.0);
double gen_sym_eigen_max(const SymMatrix& a, const SymMatrix& b);

struct GoldenResult {
  double argmax;
  double max;
};

// Golden-section search for a maximum of f on [lo, hi]; |argmax error| <= tol
// for unimodal f.
GoldenResult golden_refine(const std::function<double(double)>& f, double lo,
                           double hi, double tol);

}  // namespace formbounds
