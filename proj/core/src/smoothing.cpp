#include "conewerk/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace conewerk {

double SmoothingProfile::value(double r) const {
  if (r <= knot_a) return r;
  if (r >= knot_b) return t * (r + eps);
  const double beta = knot_b - knot_a;
  const double d = r - knot_a;
  return r - (1.0 - t) * d * d / (2.0 * beta);
}

double SmoothingProfile::derivative(double r) const {
  if (r <= knot_a) return 1.0;
  if (r >= knot_b) return t;
  return 1.0 - (1.0 - t) * (r - knot_a) / (knot_b - knot_a);
}

double SmoothingProfile::second_derivative(double r) const {
  if (r <= knot_a || r >= knot_b) return 0.0;
  return -(1.0 - t) / (knot_b - knot_a);
}

SmoothingFeasibility smoothing_feasibility(double t, double r0, double eps) {
  SmoothingFeasibility f;
  f.t_min = 0.5;
  f.t_max = r0 / (r0 + 2.0 * eps);
  f.feasible = t >= f.t_min && t <= f.t_max;
  f.boundary = f.feasible && (t == f.t_min || t == f.t_max);
  return f;
}

SmoothingProfile build_smoothing(double t, double r0, double eps) {
  if (!(t < 1.0))
    throw std::domain_error(
        "t >= 1: no concave interpolation exists, the slope must drop from "
        "1 to t");
  if (!(t > 0.0)) throw std::domain_error("t must be positive");
  if (!(r0 > 0.0)) throw std::domain_error("r0 must be positive");
  if (!(eps > 0.0 && eps < r0 / 4.0))
    throw std::domain_error("eps must lie in (0, r0/4)");

  const auto feas = smoothing_feasibility(t, r0, eps);
  if (!feas.feasible)
    throw std::domain_error(
        "no concave C^1 profile matches both boundary clauses: need "
        "1/2 <= t <= r0/(r0+2*eps)");

  SmoothingProfile p;
  p.t = t;
  p.r0 = r0;
  p.eps = eps;
  const double cross = t * eps / (1.0 - t);  // where r meets t(r+eps)
  const double half = std::min(cross - eps, r0 / 2.0 - cross);
  p.knot_a = cross - half;
  p.knot_b = cross + half;
  p.c1_at_knots = half > 0.0;
  return p;
}

double warped_curvature(const SmoothingProfile& p, double r) {
  if (!(r > 0.0 && r < p.domain_end()))
    throw std::domain_error("r outside (0, r0-eps)");
  for (double knot : {p.eps, p.knot_a, p.knot_b})
    if (std::abs(r - knot) < 1e-6)
      throw std::domain_error("r is at a knot of the profile");
  // Step 1e-5 squares to 1e-10; the difference is taken in long double so
  // roundoff stays below the 1e-8 acceptance band.
  const long double h = 1e-5L;
  auto value = [&p](long double r_) {
    if (r_ <= p.knot_a) return r_;
    if (r_ >= p.knot_b) return (long double)p.t * (r_ + (long double)p.eps);
    const long double beta = (long double)p.knot_b - (long double)p.knot_a;
    const long double d = r_ - (long double)p.knot_a;
    return r_ - (1.0L - (long double)p.t) * d * d / (2.0L * beta);
  };
  const long double second =
      (value(r + h) - 2.0L * value(r) + value(r - h)) / (h * h);
  return static_cast<double>(-second / value(r));
}

}  // namespace conewerk
