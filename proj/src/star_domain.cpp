#include "formbounds/star_domain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "formbounds/numerics.hpp"

namespace formbounds {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string format_violations(const std::vector<Violation>& violations) {
  std::ostringstream os;
  os << "domain validation failed:";
  for (const auto& v : violations) os << " [" << v.field << "] " << v.message;
  return os.str();
}

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  return t;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(format_violations(violations)),
      violations_(std::move(violations)) {}

SpecError::SpecError(std::string field, std::string message)
    : std::runtime_error("[" + field + "] " + message), field_(std::move(field)) {}

StarDomain StarDomain::ball(int dim, double radius, double star_radius,
                            int angular_grid) {
  if (dim < 2) throw std::invalid_argument("dimension must be >= 2");
  if (radius <= 0) throw std::invalid_argument("ball radius must be positive");
  if (star_radius <= 0) throw std::invalid_argument("star radius must be positive");
  StarDomain d;
  d.dim_ = dim;
  d.kind_ = DomainKind::Ball;
  d.ball_radius_ = radius;
  d.star_radius_ = star_radius;
  d.angular_grid_ = angular_grid > 0 ? angular_grid : (dim == 2 ? 1024 : 64);
  return d;
}

StarDomain StarDomain::ellipse(double semi_axis_x, double semi_axis_y,
                               double star_radius, int angular_grid) {
  if (semi_axis_x <= 0 || semi_axis_y <= 0) {
    throw std::invalid_argument("semi-axes must be positive");
  }
  if (star_radius <= 0) throw std::invalid_argument("star radius must be positive");
  StarDomain d;
  d.dim_ = 2;
  d.kind_ = DomainKind::Ellipse;
  d.semi_axis_x_ = semi_axis_x;
  d.semi_axis_y_ = semi_axis_y;
  d.star_radius_ = star_radius;
  d.angular_grid_ = angular_grid > 0 ? angular_grid : 1024;
  return d;
}

StarDomain StarDomain::radial_fourier(double constant,
                                      std::vector<double> cos_coeffs,
                                      std::vector<double> sin_coeffs,
                                      double star_radius, int angular_grid) {
  if (star_radius <= 0) throw std::invalid_argument("star radius must be positive");
  StarDomain d;
  d.dim_ = 2;
  d.kind_ = DomainKind::RadialFourier;
  d.fourier_constant_ = constant;
  d.fourier_cos_ = std::move(cos_coeffs);
  d.fourier_sin_ = std::move(sin_coeffs);
  d.star_radius_ = star_radius;
  d.angular_grid_ = angular_grid > 0 ? angular_grid : 1024;
  return d;
}

StarDomain StarDomain::sampled(std::vector<double> theta, std::vector<double> r0,
                               double star_radius) {
  if (theta.size() != r0.size()) {
    throw std::invalid_argument("theta and r0 arrays must have equal length");
  }
  if (theta.size() < 4) throw std::invalid_argument("need at least 4 samples");
  if (star_radius <= 0) throw std::invalid_argument("star radius must be positive");
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (theta[i] < 0 || theta[i] >= kTwoPi) {
      throw std::invalid_argument("sample angles must lie in [0, 2*pi)");
    }
    if (i > 0 && theta[i] <= theta[i - 1]) {
      throw std::invalid_argument("sample angles must be strictly increasing");
    }
  }
  StarDomain d;
  d.dim_ = 2;
  d.kind_ = DomainKind::Sampled;
  d.sample_theta_ = std::move(theta);
  d.sample_r0_ = std::move(r0);
  d.star_radius_ = star_radius;
  d.angular_grid_ = static_cast<int>(d.sample_theta_.size());
  return d;
}

double StarDomain::radius(double theta) const {
  switch (kind_) {
    case DomainKind::Ball:
      return ball_radius_;
    case DomainKind::Ellipse: {
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      const double p = semi_axis_x_;
      const double q = semi_axis_y_;
      return p * q / std::sqrt(q * q * c * c + p * p * s * s);
    }
    case DomainKind::RadialFourier: {
      double r = fourier_constant_;
      for (std::size_t k = 0; k < fourier_cos_.size(); ++k) {
        r += fourier_cos_[k] * std::cos(static_cast<double>(k + 1) * theta);
      }
      for (std::size_t k = 0; k < fourier_sin_.size(); ++k) {
        r += fourier_sin_[k] * std::sin(static_cast<double>(k + 1) * theta);
      }
      return r;
    }
    case DomainKind::Sampled: {
      // Periodic linear interpolation between samples.
      const double t = wrap_angle(theta);
      const auto& ts = sample_theta_;
      const auto& rs = sample_r0_;
      const std::size_t n = ts.size();
      auto it = std::upper_bound(ts.begin(), ts.end(), t);
      std::size_t hi = static_cast<std::size_t>(it - ts.begin());
      std::size_t lo = (hi == 0) ? n - 1 : hi - 1;
      double t_lo = ts[lo];
      double t_hi = (hi == n || hi == 0) ? ts[hi % n] + kTwoPi : ts[hi % n];
      double tt = (hi == 0) ? t + kTwoPi : t;
      const double span = t_hi - t_lo;
      const double alpha = span > 0 ? (tt - t_lo) / span : 0.0;
      return (1.0 - alpha) * rs[lo] + alpha * rs[hi % n];
    }
  }
  return 0.0;
}

double StarDomain::radius_deriv(double theta) const {
  switch (kind_) {
    case DomainKind::Ball:
      return 0.0;
    case DomainKind::Ellipse: {
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      const double p = semi_axis_x_;
      const double q = semi_axis_y_;
      const double den = q * q * c * c + p * p * s * s;
      return p * q * (q * q - p * p) * s * c / (den * std::sqrt(den));
    }
    case DomainKind::RadialFourier: {
      double dr = 0.0;
      for (std::size_t k = 0; k < fourier_cos_.size(); ++k) {
        const double kk = static_cast<double>(k + 1);
        dr -= fourier_cos_[k] * kk * std::sin(kk * theta);
      }
      for (std::size_t k = 0; k < fourier_sin_.size(); ++k) {
        const double kk = static_cast<double>(k + 1);
        dr += fourier_sin_[k] * kk * std::cos(kk * theta);
      }
      return dr;
    }
    case DomainKind::Sampled: {
      // Central difference at the nearest sample node.
      const double t = wrap_angle(theta);
      const auto& ts = sample_theta_;
      const auto& rs = sample_r0_;
      const std::size_t n = ts.size();
      std::size_t best = 0;
      double best_dist = 1e300;
      for (std::size_t i = 0; i < n; ++i) {
        double dist = std::abs(ts[i] - t);
        dist = std::min(dist, kTwoPi - dist);
        if (dist < best_dist) {
          best_dist = dist;
          best = i;
        }
      }
      const std::size_t prev = (best + n - 1) % n;
      const std::size_t next = (best + 1) % n;
      double dt = ts[next] - ts[prev];
      if (next < prev) dt += kTwoPi;
      return (rs[next] - rs[prev]) / dt;
    }
  }
  return 0.0;
}

StarDomain StarDomain::uniformly_scaled(double lambda) const {
  if (lambda <= 0) throw std::invalid_argument("scale factor must be positive");
  StarDomain d = *this;
  d.star_radius_ *= lambda;
  d.ball_radius_ *= lambda;
  d.semi_axis_x_ *= lambda;
  d.semi_axis_y_ *= lambda;
  d.fourier_constant_ *= lambda;
  for (double& c : d.fourier_cos_) c *= lambda;
  for (double& c : d.fourier_sin_) c *= lambda;
  for (double& r : d.sample_r0_) r *= lambda;
  return d;
}

namespace {

// Angles at which the invariants are checked: the sample grid for sampled
// domains, a uniform grid otherwise.
std::vector<double> check_angles(const StarDomain& dom) {
  if (dom.kind() == DomainKind::Sampled) return dom.sample_theta();
  const int k = dom.angular_grid();
  std::vector<double> angles(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) angles[static_cast<std::size_t>(i)] = kTwoPi * i / k;
  return angles;
}

std::string theta_label(double theta) {
  std::ostringstream os;
  os << "theta=" << theta;
  return os.str();
}

}  // namespace

std::vector<Violation> validate(const StarDomain& dom) {
  std::vector<Violation> out;
  const double a = dom.star_radius();
  const double tol = 1e-12 * a;
  const auto angles = check_angles(dom);
  bool positive_ok = true;
  bool inclusion_ok = true;
  bool tangent_ok = true;
  for (double theta : angles) {
    const double r = dom.radius(theta);
    if (positive_ok && r <= 0) {
      out.push_back({"params", "r0 <= 0 at " + theta_label(theta)});
      positive_ok = false;
      continue;
    }
    if (inclusion_ok && r < a - tol) {
      out.push_back({"star_radius", "r0 < a at " + theta_label(theta)});
      inclusion_ok = false;
    }
    if (dom.dim() == 2 && tangent_ok && r > 0) {
      const double dr = dom.radius_deriv(theta);
      const double tangent_dist = r * r / std::sqrt(r * r + dr * dr);
      if (tangent_dist < a - tol) {
        out.push_back({"star_radius",
                       "tangent-distance criterion r0^2/sqrt(r0^2+r0'^2) >= a "
                       "violated at " + theta_label(theta)});
        tangent_ok = false;
      }
    }
  }
  return out;
}

namespace {

struct MaxResult {
  double value;
  double error;
};

// Grid maximum of f over [0, 2*pi) plus one golden-section pass around the
// argmax; the reported error is the grid-to-refined difference.
MaxResult maximize_angular(const StarDomain& dom,
                           const std::function<double(double)>& f) {
  if (dom.kind() == DomainKind::Sampled) {
    const auto& ts = dom.sample_theta();
    double best_full = -1e300;
    double best_half = -1e300;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const double v = f(ts[i]);
      best_full = std::max(best_full, v);
      if (i % 2 == 0) best_half = std::max(best_half, v);
    }
    return {best_full, std::abs(best_full - best_half)};
  }
  const int k = dom.angular_grid();
  double best = -1e300;
  double best_theta = 0.0;
  for (int i = 0; i < k; ++i) {
    const double theta = kTwoPi * i / k;
    const double v = f(theta);
    if (v > best) {
      best = v;
      best_theta = theta;
    }
  }
  const double h = kTwoPi / k;
  const GoldenResult refined =
      golden_refine(f, best_theta - h, best_theta + h, 1e-10);
  const double value = std::max(best, refined.max);
  return {value, std::abs(refined.max - best)};
}

}  // namespace

ShapeFactors shape_factors(const StarDomain& dom) {
  auto violations = validate(dom);
  if (!violations.empty()) throw ValidationError(std::move(violations));

  ShapeFactors out;
  out.grid_resolution = dom.angular_grid();
  const double a = dom.star_radius();

  if (dom.kind() == DomainKind::Ball) {
    out.eta = dom.radius(0.0) / a;
    out.q_factor = 0.0;
    return out;
  }

  const MaxResult eta = maximize_angular(
      dom, [&](double theta) { return dom.radius(theta) / a; });
  out.eta = eta.value;
  out.eta_error = eta.error;

  const MaxResult q = maximize_angular(dom, [&](double theta) {
    return std::abs(dom.radius_deriv(theta)) / dom.radius(theta);
  });
  out.q_factor = q.value;
  out.q_error = q.error;
  return out;
}

double eccentricity(const StarDomain& dom) { return shape_factors(dom).eta; }

double shape_factor_q(const StarDomain& dom) { return shape_factors(dom).q_factor; }

PolarGrid polar_grid(const StarDomain& dom, int radial_order, int angular_points) {
  if (dom.dim() != 2) {
    throw std::invalid_argument("polar quadrature is unsupported for dim != 2");
  }
  if (radial_order < 1) throw std::invalid_argument("radial order must be >= 1");
  if (angular_points < 4) throw std::invalid_argument("need >= 4 angular points");
  const GaussLegendreRule rule = gauss_legendre(radial_order);
  PolarGrid grid;
  const std::size_t total =
      static_cast<std::size_t>(radial_order) * static_cast<std::size_t>(angular_points);
  grid.x1.reserve(total);
  grid.x2.reserve(total);
  grid.w.reserve(total);
  const double w_theta = kTwoPi / angular_points;
  for (int i = 0; i < angular_points; ++i) {
    const double theta = kTwoPi * i / angular_points;
    const double r0 = dom.radius(theta);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    for (int k = 0; k < radial_order; ++k) {
      const double r = r0 * (rule.nodes[k] + 1.0) / 2.0;
      grid.x1.push_back(r * c);
      grid.x2.push_back(r * s);
      grid.w.push_back(w_theta * (r0 / 2.0) * rule.weights[k] * r);
    }
  }
  return grid;
}

double polar_quadrature(const StarDomain& dom,
                        const std::function<double(double, double)>& f,
                        int radial_order, int angular_points) {
  const PolarGrid grid = polar_grid(dom, radial_order, angular_points);
  double acc = 0.0;
  for (std::size_t i = 0; i < grid.w.size(); ++i) {
    acc += grid.w[i] * f(grid.x1[i], grid.x2[i]);
  }
  return acc;
}

namespace {

const nlohmann::json& require_field(const nlohmann::json& j, const std::string& path,
                                    const char* key) {
  if (!j.contains(key)) throw SpecError(path.empty() ? key : path + "." + key,
                                        "missing required field");
  return j.at(key);
}

double require_positive_number(const nlohmann::json& j, const std::string& field) {
  if (!j.is_number()) throw SpecError(field, "expected a number");
  const double v = j.get<double>();
  if (!(v > 0)) throw SpecError(field, "must be positive");
  return v;
}

std::vector<double> number_array(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array()) throw SpecError(field, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number()) throw SpecError(field, "expected an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

}  // namespace

StarDomain parse_domain(const nlohmann::json& spec) {
  if (!spec.is_object()) throw SpecError("", "domain spec must be a JSON object");
  const auto& dim_json = require_field(spec, "", "dim");
  if (!dim_json.is_number_integer()) throw SpecError("dim", "expected an integer");
  const int dim = dim_json.get<int>();
  if (dim < 2) throw SpecError("dim", "must be >= 2");

  const auto& kind_json = require_field(spec, "", "kind");
  if (!kind_json.is_string()) throw SpecError("kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();

  const double star_radius =
      require_positive_number(require_field(spec, "", "star_radius"), "star_radius");

  int angular = 0;
  if (spec.contains("grid")) {
    const auto& grid = spec.at("grid");
    if (!grid.is_object()) throw SpecError("grid", "expected an object");
    if (grid.contains("angular")) {
      if (!grid.at("angular").is_number_integer()) {
        throw SpecError("grid.angular", "expected an integer");
      }
      angular = grid.at("angular").get<int>();
      if (angular < 4) throw SpecError("grid.angular", "must be >= 4");
    }
  }

  const auto& params = require_field(spec, "", "params");
  if (!params.is_object()) throw SpecError("params", "expected an object");

  if (kind == "ball") {
    const double radius = require_positive_number(
        require_field(params, "params", "radius"), "params.radius");
    return StarDomain::ball(dim, radius, star_radius, angular);
  }
  if (dim != 2) {
    throw SpecError("dim", "kind '" + kind + "' is only supported in dimension 2");
  }
  if (kind == "ellipse") {
    const auto axes = number_array(require_field(params, "params", "semi_axes"),
                                   "params.semi_axes");
    if (axes.size() != 2) throw SpecError("params.semi_axes", "expected [p, q]");
    if (axes[0] <= 0 || axes[1] <= 0) {
      throw SpecError("params.semi_axes", "semi-axes must be positive");
    }
    return StarDomain::ellipse(axes[0], axes[1], star_radius, angular);
  }
  if (kind == "radial_fourier") {
    std::vector<double> cos_coeffs, sin_coeffs;
    if (params.contains("cos")) {
      cos_coeffs = number_array(params.at("cos"), "params.cos");
    }
    if (params.contains("sin")) {
      sin_coeffs = number_array(params.at("sin"), "params.sin");
    }
    const double constant = require_positive_number(
        require_field(params, "params", "constant"), "params.constant");
    return StarDomain::radial_fourier(constant, std::move(cos_coeffs),
                                      std::move(sin_coeffs), star_radius, angular);
  }
  if (kind == "sampled") {
    auto theta = number_array(require_field(params, "params", "theta"),
                              "params.theta");
    auto r0 = number_array(require_field(params, "params", "r0"), "params.r0");
    if (theta.size() != r0.size()) {
      throw SpecError("params.r0", "theta and r0 must have equal length");
    }
    try {
      return StarDomain::sampled(std::move(theta), std::move(r0), star_radius);
    } catch (const std::invalid_argument& e) {
      throw SpecError("params.theta", e.what());
    }
  }
  throw SpecError("kind", "unknown kind '" + kind +
                              "' (expected ball|ellipse|radial_fourier|sampled)");
}

nlohmann::json domain_to_json(const StarDomain& dom) {
  nlohmann::json j;
  j["dim"] = dom.dim();
  j["star_radius"] = dom.star_radius();
  j["grid"] = {{"angular", dom.angular_grid()}};
  switch (dom.kind()) {
    case DomainKind::Ball:
      j["kind"] = "ball";
      j["params"] = {{"radius", dom.ball_radius()}};
      break;
    case DomainKind::Ellipse:
      j["kind"] = "ellipse";
      j["params"] = {{"semi_axes", {dom.semi_axis_x(), dom.semi_axis_y()}}};
      break;
    case DomainKind::RadialFourier:
      j["kind"] = "radial_fourier";
      j["params"] = {{"constant", dom.fourier_constant()},
                     {"cos", dom.fourier_cos()},
                     {"sin", dom.fourier_sin()}};
      break;
    case DomainKind::Sampled:
      j["kind"] = "sampled";
      j["params"] = {{"theta", dom.sample_theta()}, {"r0", dom.sample_r0()}};
      break;
  }
  return j;
}

}  // namespace formbounds
