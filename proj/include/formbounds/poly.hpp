#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "formbounds/rational.hpp"

namespace formbounds {

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// keyed by exponent tuples of fixed length dim; zero coefficients are never
// stored.
class Poly {
 public:
  using Exponents = std::vector<int>;

  explicit Poly(int dim);

  static Poly constant(int dim, const Rational& c);
  static Poly variable(int dim, int index);  // x_index, 1-based
  static Poly monomial(int dim, Exponents exps, const Rational& c);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // max total exponent, -1 for the zero polynomial
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  // Accumulates into the stored coefficient and drops exact zeros.
  void add_term(const Exponents& exps, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(const Rational& c, const Poly& p);

  Poly differentiate(int index) const;  // d/dx_index, 1-based

  double evaluate(std::span<const double> x) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void require_same_dim(const Poly& o) const;

  int dim_;
  std::map<Exponents, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace formbounds
