#include "formbounds/poly_form.hpp"

#include <ostream>
#include <random>
#include <stdexcept>
#include <vector>

namespace formbounds {

PolyForm d(const PolyForm& f) {
  const int n = f.dim();
  if (f.grade() == n) return PolyForm::zero(n, n);
  PolyForm out(n, f.grade() + 1);
  for (const auto& [idx, p] : f.coefficients()) {
    for (int j = 1; j <= n; ++j) {
      if (idx.contains(j)) continue;
      Poly dp = p.differentiate(j);
      if (dp.is_zero()) continue;
      if (detail::insertion_sign(j, idx) < 0) dp = -dp;
      out.add(idx.inserted(j), dp);
    }
  }
  return out;
}

PolyForm dstar(const PolyForm& f) {
  const int n = f.dim();
  const int l = f.grade();
  if (l == 0) return PolyForm::zero(n, 0);
  PolyForm out = hodge_star(d(hodge_star(f)));
  // Euclidean sign convention, anchored at the l = 2 divergence formula.
  if ((n * (l + 1) + 1) % 2 != 0) out = -out;
  return out;
}

PolyForm laplacian(const PolyForm& f) {
  const int n = f.dim();
  const int l = f.grade();
  PolyForm out = PolyForm::zero(n, l);
  if (l < n) out += dstar(d(f));
  if (l > 0) out += d(dstar(f));
  return out;
}

Poly norm_squared(const PolyForm& f) {
  return inner(f, f);
}

namespace {

// Entry (i, j) of the antisymmetric matrix represented by the 2-form v,
// 1-based indices.
Poly matrix_entry(const PolyForm& v, int i, int j) {
  if (i == j) return Poly(v.dim());
  if (i < j) return v.coefficient(MultiIndex{i, j});
  return -v.coefficient(MultiIndex{j, i});
}

}  // namespace

PolyForm div_vv(const PolyForm& v) {
  if (v.grade() != 2) throw std::invalid_argument("div_vv requires a 2-form");
  const int n = v.dim();
  PolyForm out(n, 1);
  for (int i = 1; i <= n; ++i) {
    Poly component(n);
    for (int k = 1; k <= n; ++k) {
      Poly entry(n);  // (V V)_{ik}
      for (int j = 1; j <= n; ++j) {
        entry += matrix_entry(v, i, j) * matrix_entry(v, j, k);
      }
      component += entry.differentiate(k);
    }
    if (!component.is_zero()) out.add(MultiIndex{i}, component);
  }
  return out;
}

PolyForm payne_residual(const PolyForm& u, const PolyForm& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("form dimension mismatch");
  if (u.grade() != 0 || v.grade() != 2) {
    throw std::invalid_argument("payne_residual expects a scalar and a 2-form");
  }
  const int n = u.dim();
  const Poly u_poly = u.coefficient(MultiIndex{});

  PolyForm two_uv = scaled(v, Rational(2) * u_poly);
  Poly u_sq = u_poly * u_poly;
  Poly v_sq = norm_squared(v);

  PolyForm residual = dstar(two_uv);
  residual -= d(PolyForm::basis(n, MultiIndex{}, u_sq));
  residual -= d(PolyForm::basis(n, MultiIndex{}, v_sq));
  residual -= scaled(div_vv(v), Poly::constant(n, Rational(2)));
  return residual;
}

std::pair<Poly, Poly> plane_harmonic_pair(int dim, int i, int j, int k) {
  if (i < 1 || j < 1 || i > dim || j > dim || i == j) {
    throw std::invalid_argument("plane indices must be distinct and in range");
  }
  if (k < 0) throw std::invalid_argument("power must be nonnegative");
  Poly re(dim);
  Poly im(dim);
  // (x_i + i x_j)^k expanded by the binomial theorem; i^m cycles with m mod 4.
  std::int64_t binom = 1;
  for (int m = 0; m <= k; ++m) {
    Poly::Exponents e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(i - 1)] = k - m;
    e[static_cast<std::size_t>(j - 1)] = m;
    Rational c(binom);
    switch (m % 4) {
      case 0: re.add_term(e, c); break;
      case 1: im.add_term(e, c); break;
      case 2: re.add_term(e, -c); break;
      case 3: im.add_term(e, -c); break;
    }
    binom = binom * (k - m) / (m + 1);
  }
  return {re, im};
}

bool is_conjugate(const PolyForm& u, const PolyForm& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("form dimension mismatch");
  if (u.grade() != 0 || v.grade() != 2) return false;
  if (!(d(u) == dstar(v))) return false;
  if (!d(v).is_zero()) return false;
  if (!laplacian(u).is_zero()) return false;
  return true;
}

ConjugatePair ConjugatePair::create(PolyForm u, PolyForm v) {
  if (!is_conjugate(u, v)) {
    throw std::invalid_argument("forms do not satisfy the conjugacy relations");
  }
  return ConjugatePair(std::move(u), std::move(v));
}

ConjugatePair generate_conjugate_pair(int dim, int max_degree, std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("dimension must be >= 2");
  if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
  std::mt19937_64 rng(seed);
  // Raw modulo keeps the draw identical across standard libraries.
  auto draw = [&rng](std::uint64_t m) {
    return static_cast<int>(rng() % m);
  };

  PolyForm u(dim, 0);
  PolyForm v(dim, 2);
  const int term_count = 2 + draw(4);
  for (int t = 0; t < term_count; ++t) {
    int i = 1 + draw(static_cast<std::uint64_t>(dim));
    int j = 1 + draw(static_cast<std::uint64_t>(dim));
    if (i == j) j = (j % dim) + 1;
    if (i > j) std::swap(i, j);
    const int k = 1 + draw(static_cast<std::uint64_t>(max_degree));
    std::int64_t num = static_cast<std::int64_t>(draw(19)) - 9;
    if (num == 0) num = 1;
    const std::int64_t den = 1 + draw(9);
    const Rational c(num, den);

    auto [re, im] = plane_harmonic_pair(dim, i, j, k);
    if (draw(2) == 1) {
      // Multiply the analytic monomial by i: (re, im) -> (-im, re).
      Poly tmp = re;
      re = -im;
      im = tmp;
    }
    u.add(MultiIndex{}, c * re);
    v.add(MultiIndex{i, j}, c * im);
  }
  return ConjugatePair::create(std::move(u), std::move(v));
}

PolyForm payne_residual(const ConjugatePair& pair) {
  return payne_residual(pair.u(), pair.v());
}

std::ostream& operator<<(std::ostream& os, const PolyForm& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [idx, p] : f.coefficients()) {
    if (!first) os << "  +  ";
    first = false;
    os << '[' << p << ']';
    for (int i : idx.indices()) os << " dx" << i;
  }
  return os;
}

}  // namespace formbounds
