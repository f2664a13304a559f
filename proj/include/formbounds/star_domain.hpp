#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace formbounds {

enum class DomainKind { Ball, Ellipse, RadialFourier, Sampled };

struct Violation {
  std::string field;
  std::string message;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Error in a domain specification file; `field` is the JSON path of the
// offending entry.
class SpecError : public std::runtime_error {
 public:
  SpecError(std::string field, std::string message);
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Domain star-shaped with respect to the ball of radius `star_radius`
// centered at the origin, described by the radial boundary function
// r0(theta). Non-constant radial families are planar; a ball is accepted in
// any dimension n >= 2.
class StarDomain {
 public:
  static StarDomain ball(int dim, double radius, double star_radius,
                         int angular_grid = 0);
  static StarDomain ellipse(double semi_axis_x, double semi_axis_y,
                            double star_radius, int angular_grid = 0);
  static StarDomain radial_fourier(double constant, std::vector<double> cos_coeffs,
                                   std::vector<double> sin_coeffs,
                                   double star_radius, int angular_grid = 0);
  static StarDomain sampled(std::vector<double> theta, std::vector<double> r0,
                            double star_radius);

  int dim() const { return dim_; }
  double star_radius() const { return star_radius_; }
  DomainKind kind() const { return kind_; }
  bool analytic_gradient() const { return kind_ != DomainKind::Sampled; }
  bool convex_family() const {
    return kind_ == DomainKind::Ball || kind_ == DomainKind::Ellipse;
  }
  int angular_grid() const { return angular_grid_; }

  double radius(double theta) const;        // r0(theta); constant for a ball
  double radius_deriv(double theta) const;  // dr0/dtheta

  const std::vector<double>& sample_theta() const { return sample_theta_; }
  const std::vector<double>& sample_r0() const { return sample_r0_; }

  double ball_radius() const { return ball_radius_; }
  double semi_axis_x() const { return semi_axis_x_; }
  double semi_axis_y() const { return semi_axis_y_; }
  double fourier_constant() const { return fourier_constant_; }
  const std::vector<double>& fourier_cos() const { return fourier_cos_; }
  const std::vector<double>& fourier_sin() const { return fourier_sin_; }

  // (r0, a) -> (lambda r0, lambda a); eta and Q are invariant under this.
  StarDomain uniformly_scaled(double lambda) const;

 private:
  StarDomain() = default;

  int dim_ = 2;
  double star_radius_ = 1.0;
  DomainKind kind_ = DomainKind::Ball;
  int angular_grid_ = 0;

  double ball_radius_ = 1.0;
  double semi_axis_x_ = 1.0, semi_axis_y_ = 1.0;
  double fourier_constant_ = 1.0;
  std::vector<double> fourier_cos_, fourier_sin_;
  std::vector<double> sample_theta_, sample_r0_;
};

// Empty iff all star-shapedness invariants hold at grid resolution. For
// n >= 3 only r0 >= a is checked; full star-shapedness is asserted by the
// user (the planar tangent-distance criterion needs the angular gradient).
std::vector<Violation> validate(const StarDomain& dom);

struct ShapeFactors {
  double eta = 1.0;       // max r0 / a over the boundary
  double q_factor = 0.0;  // max |r grad r0| / r0 over the boundary
  int grid_resolution = 0;
  double eta_error = 0.0;  // grid-vs-refined discrepancy
  double q_error = 0.0;
};

// Computes eta and Q by grid maximization plus one golden-section refinement
// around the grid argmax. Throws ValidationError for invalid domains.
ShapeFactors shape_factors(const StarDomain& dom);

double eccentricity(const StarDomain& dom);
double shape_factor_q(const StarDomain& dom);

// Quadrature nodes and weights for integrals over a planar star domain in
// polar form: x1/x2 are Cartesian coordinates, w includes the r Jacobian.
struct PolarGrid {
  std::vector<double> x1, x2, w;
};

PolarGrid polar_grid(const StarDomain& dom, int radial_order, int angular_points);

// Integral of f over the domain via Gauss-Legendre in r (radial_order nodes)
// and the periodic trapezoid rule in theta (angular_points points). Planar
// domains only.
double polar_quadrature(const StarDomain& dom,
                        const std::function<double(double, double)>& f,
                        int radial_order, int angular_points);

// Domain specification files: JSON with keys dim, kind, star_radius, params,
// and optional grid.angular. Throws SpecError naming the offending field.
StarDomain parse_domain(const nlohmann::json& spec);
nlohmann::json domain_to_json(const StarDomain& dom);

}  // namespace formbounds
