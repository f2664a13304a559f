#include "formbounds/poly.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace formbounds {

Poly::Poly(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("polynomial dimension must be >= 1");
}

Poly Poly::constant(int dim, const Rational& c) {
  Poly p(dim);
  p.add_term(Exponents(static_cast<std::size_t>(dim), 0), c);
  return p;
}

Poly Poly::variable(int dim, int index) {
  if (index < 1 || index > dim) {
    throw std::invalid_argument("variable index out of range");
  }
  Exponents e(static_cast<std::size_t>(dim), 0);
  e[static_cast<std::size_t>(index - 1)] = 1;
  return monomial(dim, std::move(e), Rational(1));
}

Poly Poly::monomial(int dim, Exponents exps, const Rational& c) {
  Poly p(dim);
  p.add_term(exps, c);
  return p;
}

int Poly::degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int total = std::accumulate(e.begin(), e.end(), 0);
    deg = std::max(deg, total);
  }
  return deg;
}

void Poly::add_term(const Exponents& exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != dim_) {
    throw std::invalid_argument("exponent tuple length does not match dimension");
  }
  for (int e : exps) {
    if (e < 0) throw std::invalid_argument("negative exponent");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::require_same_dim(const Poly& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("polynomial dimension mismatch");
}

Poly Poly::operator-() const {
  Poly out(dim_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_dim(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_dim(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  require_same_dim(o);
  Poly out(dim_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(ea);
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out.add_term(e, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

Poly operator*(const Rational& c, const Poly& p) {
  Poly out(p.dim());
  if (c.is_zero()) return out;
  for (const auto& [e, pc] : p.terms()) out.add_term(e, c * pc);
  return out;
}

Poly Poly::differentiate(int index) const {
  if (index < 1 || index > dim_) {
    throw std::invalid_argument("variable index out of range");
  }
  const std::size_t k = static_cast<std::size_t>(index - 1);
  Poly out(dim_);
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents de(e);
    de[k] -= 1;
    out.add_term(de, Rational(e[k]) * c);
  }
  return out;
}

double Poly::evaluate(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) {
    throw std::invalid_argument("evaluation point dimension mismatch");
  }
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.to_double();
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 1) {
        term *= x[k];
      } else if (e[k] > 1) {
        term *= std::pow(x[k], e[k]);
      }
    }
    acc += term;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  if (p.is_zero()) return os << '0';
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ')';
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      os << "*x" << (k + 1);
      if (e[k] > 1) os << '^' << e[k];
    }
  }
  return os;
}

}  // namespace formbounds
