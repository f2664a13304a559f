#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace formbounds {

// Raised when a runtime guard that should be unreachable for valid inputs
// fires (e.g. a negative radicand in a closed-form bound).
class InternalConsistencyError : public std::runtime_error {
 public:
  explicit InternalConsistencyError(const std::string& what)
      : std::runtime_error(what) {}
};

enum class HardySource { User, Convex, PlanarJohn, Cone };

const char* hardy_source_name(HardySource source);

struct HardyEstimate {
  double value = 4.0;
  HardySource source = HardySource::Convex;
};

// Chain of constants for order ell = 1: the Friedrichs-Velte bound Gamma,
// the Babuska-Aziz constant C = Gamma + 1, and the improved Poincare
// interval. The lower end Gamma/4 is only a valid lower bound when Gamma is
// the true constant, so it is reported solely for exact Gamma.
struct ConstantChainReport {
  double gamma_upper = 0.0;
  bool gamma_is_exact = false;
  double c_upper = 1.0;
  std::optional<double> p_lower_if_gamma_tight;
  double p_upper = 0.0;
  HardyEstimate hardy;
  int ell = 1;
  // Inputs echoed for provenance.
  int dim = 0;
  std::optional<double> eta;
  std::optional<double> q_factor;
};

// Upper bound for the Friedrichs-Velte constant of order 1 of an
// n-dimensional domain star-shaped with respect to a ball, in terms of the
// eccentricity eta and the shape factor Q:
//   eta^n (Q + sqrt(Q^2 + 2Q + (n^2-4)/n - ((n-4)/n) eta^-n))^2.
// Equals n - 1 at (eta, Q) = (1, 0).
double fv_upper_bound(int dim, double eta, double q);

// Spatial specialization (Q + sqrt(Q^2 + 2Q + 2))^2 eta^3; never below the
// general bound at n = 3, equal at eta = 1.
double fv_upper_bound_3d(double eta, double q);

// Hardy constant of a convex domain, any dimension.
double hardy_convex();

// Hardy bound 16 for simply connected planar John domains.
double planar_john_hardy();

// Hardy bound 16 / (n * omega(sin(theta)/2)) for a theta-cone condition,
// omega(alpha) = int_0^asin(alpha) sin^{n-2} / (2 int_0^{pi/2} sin^{n-2}).
double hardy_cone(int dim, double theta);

ConstantChainReport chain_from_gamma(double gamma, const HardyEstimate& hardy,
                                     bool gamma_is_exact);

// Gamma <= 4P and C <= 1 + 4P from an improved Poincare constant.
std::pair<double, double> chain_from_p(double p);

}  // namespace formbounds
