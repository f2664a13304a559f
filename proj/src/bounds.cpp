#include "formbounds/bounds.hpp"

#include <cmath>
#include <numbers>

#include "formbounds/numerics.hpp"

namespace formbounds {

const char* hardy_source_name(HardySource source) {
  switch (source) {
    case HardySource::User: return "user";
    case HardySource::Convex: return "convex";
    case HardySource::PlanarJohn: return "planar-john-16";
    case HardySource::Cone: return "cone";
  }
  return "unknown";
}

double fv_upper_bound(int dim, double eta, double q) {
  if (dim < 2) throw std::domain_error("dimension must be >= 2");
  if (eta < 1.0 - 1e-12) throw std::domain_error("eccentricity must be >= 1");
  if (q < 0.0) throw std::domain_error("shape factor must be >= 0");
  eta = std::max(eta, 1.0);
  const double n = static_cast<double>(dim);
  const double eta_pow = std::pow(eta, n);
  const double radicand =
      q * q + 2.0 * q + (n * n - 4.0) / n - ((n - 4.0) / n) / eta_pow;
  if (radicand < 0.0) {
    throw InternalConsistencyError("negative radicand in fv_upper_bound");
  }
  const double root = q + std::sqrt(radicand);
  return eta_pow * root * root;
}

double fv_upper_bound_3d(double eta, double q) {
  if (eta < 1.0 - 1e-12) throw std::domain_error("eccentricity must be >= 1");
  if (q < 0.0) throw std::domain_error("shape factor must be >= 0");
  eta = std::max(eta, 1.0);
  const double radicand = q * q + 2.0 * q + 2.0;
  const double root = q + std::sqrt(radicand);
  return root * root * eta * eta * eta;
}

double hardy_convex() { return 4.0; }

double planar_john_hardy() { return 16.0; }

namespace {

// int_0^upper sin^{n-2} t dt by Gauss-Legendre; smooth integrand, so 48
// points reach well below the 1e-10 relative target.
double sin_power_integral(int dim, double upper) {
  const GaussLegendreRule rule = gauss_legendre(48);
  double acc = 0.0;
  for (int k = 0; k < rule.nodes.size(); ++k) {
    const double t = upper * (rule.nodes[k] + 1.0) / 2.0;
    acc += rule.weights[k] * std::pow(std::sin(t), dim - 2);
  }
  return acc * upper / 2.0;
}

}  // namespace

double hardy_cone(int dim, double theta) {
  if (dim < 2) throw std::domain_error("dimension must be >= 2");
  if (!(theta > 0.0) || theta > std::numbers::pi / 2) {
    throw std::domain_error("theta must lie in (0, pi/2]");
  }
  const double alpha = std::sin(theta) / 2.0;
  const double omega = sin_power_integral(dim, std::asin(alpha)) /
                       (2.0 * sin_power_integral(dim, std::numbers::pi / 2));
  if (!(omega > 0.0)) {
    throw InternalConsistencyError("nonpositive omega in hardy_cone");
  }
  return 16.0 / (dim * omega);
}

ConstantChainReport chain_from_gamma(double gamma, const HardyEstimate& hardy,
                                     bool gamma_is_exact) {
  if (gamma < 0.0) throw std::domain_error("gamma must be >= 0");
  if (!(hardy.value > 0.0)) throw std::domain_error("hardy constant must be > 0");
  ConstantChainReport r;
  r.gamma_upper = gamma;
  r.gamma_is_exact = gamma_is_exact;
  r.c_upper = gamma + 1.0;
  r.p_upper = hardy.value * r.c_upper;
  if (gamma_is_exact) r.p_lower_if_gamma_tight = gamma / 4.0;
  r.hardy = hardy;
  return r;
}

std::pair<double, double> chain_from_p(double p) {
  if (p < 0.0) throw std::domain_error("p must be >= 0");
  return {4.0 * p, 1.0 + 4.0 * p};
}

}  // namespace formbounds
