#include "formbounds/numerics.hpp"

#include <cmath>
#include <string>

namespace formbounds {

NotPositiveDefiniteError::NotPositiveDefiniteError(int pivot_index, double pivot)
    : std::runtime_error("matrix not positive definite at pivot " +
                         std::to_string(pivot_index) +
                         " (value " + std::to_string(pivot) + ")"),
      pivot_index_(pivot_index),
      pivot_(pivot) {}

SymMatrix::SymMatrix(Eigen::MatrixXd m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw std::invalid_argument("symmetric matrix must be square");
  }
  const double scale = std::max(m_.cwiseAbs().maxCoeff(), 1e-300);
  const double asym = (m_ - m_.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol * scale) {
    throw std::invalid_argument("matrix asymmetry exceeds tolerance");
  }
  m_ = ((m_ + m_.transpose()) / 2.0).eval();
}

GaussLegendreRule gauss_legendre(int point_count) {
  if (point_count < 1 || point_count > 64) {
    throw std::invalid_argument("gauss_legendre supports 1..64 points");
  }
  const int m = point_count;
  GaussLegendreRule rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  // Newton iteration on P_m from the Chebyshev-based initial guess.
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= m; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[m - 1 - i] = x;
    rule.weights[m - 1 - i] = w;
  }
  if (m % 2 == 1) rule.nodes[m / 2] = 0.0;
  return rule;
}

Eigen::MatrixXd cholesky(const SymMatrix& b, double min_pivot_rel) {
  const int n = b.order();
  const Eigen::MatrixXd& a = b.matrix();
  const double max_diag = n > 0 ? a.diagonal().maxCoeff() : 0.0;
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    double s = a(j, j);
    for (int k = 0; k < j; ++k) s -= l(j, k) * l(j, k);
    if (s <= 0.0 || s < min_pivot_rel * max_diag) {
      throw NotPositiveDefiniteError(j, s);
    }
    l(j, j) = std::sqrt(s);
    for (int i = j + 1; i < n; ++i) {
      double t = a(i, j);
      for (int k = 0; k < j; ++k) t -= l(i, k) * l(j, k);
      l(i, j) = t / l(j, j);
    }
  }
  return l;
}

SymEigenResult sym_eigen(const SymMatrix& a) {
  if (a.order() > 200) {
    throw std::invalid_argument("sym_eigen supports order <= 200");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

GenEigenMaxResult gen_sym_eigen_max_vector(const SymMatrix& a, const SymMatrix& b,
                                           double min_pivot_rel) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("matrix order mismatch");
  }
  const Eigen::MatrixXd l = cholesky(b, min_pivot_rel);
  const auto lower = l.triangularView<Eigen::Lower>();
  // C = L^{-1} A L^{-T}, symmetric with the same spectrum as (A, B).
  Eigen::MatrixXd c = lower.solve(a.matrix());
  c = lower.solve(c.transpose().eval());
  SymEigenResult eig = sym_eigen(SymMatrix(c, 1e-8));
  const int last = a.order() - 1;
  Eigen::VectorXd y = eig.vectors.col(last);
  Eigen::VectorXd x = l.transpose().triangularView<Eigen::Upper>().solve(y);
  return {eig.values[last], x};
}

double gen_sym_eigen_max(const SymMatrix& a, const SymMatrix& b) {
  return gen_sym_eigen_max_vector(a, b).value;
}

GoldenResult golden_refine(const std::function<double(double)>& f, double lo,
                           double hi, double tol) {
  if (!(lo <= hi)) throw std::invalid_argument("invalid bracket");
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  const double xm = (a + b) / 2.0;
  return {xm, f(xm)};
}

}  // namespace formbounds
