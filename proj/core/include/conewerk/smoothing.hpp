#pragma once

namespace conewerk {

// Concave C^1 profile f on [0, r0-eps) with f(r) = r on [0, eps] and
// f(r) = t(r+eps) from the inner knot on (in particular on (r0/2, r0-eps)).
// The two lines cross at r* = t*eps/(1-t); the transition is a single
// concave quadratic arc centered there, so feasibility is exactly
// eps <= r* <= r0/2, i.e. 1/2 <= t <= r0/(r0+2*eps).  At the closed ends
// the arc degenerates to a corner (concave but not C^1), flagged below.
struct SmoothingProfile {
  double t = 0.0;
  double r0 = 0.0;
  double eps = 0.0;
  double knot_a = 0.0;  // arc start (slope 1)
  double knot_b = 0.0;  // arc end (slope t)
  bool c1_at_knots = true;

  double domain_end() const { return r0 - eps; }
  double value(double r) const;
  double derivative(double r) const;
  double second_derivative(double r) const;  // piecewise constant
};

struct SmoothingFeasibility {
  double t_min = 0.5;  // independent of eps
  double t_max = 0.0;  // r0/(r0+2*eps)
  bool feasible = false;
  bool boundary = false;  // corner cases t = t_min or t = t_max
};

SmoothingFeasibility smoothing_feasibility(double t, double r0, double eps);

// Throws std::domain_error for t <= 0 or t >= 1 (slopes cannot drop from 1
// to t concavely), eps outside (0, r0/4), or (t, eps) outside the feasible
// band above.  Boundary values of t produce the piecewise-linear profile
// with c1_at_knots = false.
SmoothingProfile build_smoothing(double t, double r0, double eps);

// Sectional curvature -f''(r)/f(r) of the planes orthogonal to the axis,
// evaluated by central finite differences with step 1e-5.  Rejects r at a
// knot (within 1e-6) or outside (0, r0-eps).
double warped_curvature(const SmoothingProfile& p, double r);

}  // namespace conewerk
