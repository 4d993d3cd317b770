#pragma once

#include <numbers>

namespace conewerk {

// Sectional curvature of the model space, pinched to [-1, 0].
class Curvature {
 public:
  explicit Curvature(double k);
  double value() const { return k_; }
  bool is_flat() const { return k_ == 0.0; }

 private:
  double k_;
};

// Cone angle in (0, 2*pi].  The value 2*pi denotes the non-singular model.
class ConeAngle {
 public:
  explicit ConeAngle(double alpha);
  double value() const { return alpha_; }
  bool is_nonsingular() const;
  // Fraction alpha / 2*pi of the full turn.
  double turn_fraction() const { return alpha_ / (2.0 * std::numbers::pi); }

 private:
  double alpha_;
};

// Fermi (cylindrical) coordinates around the singular axis.
struct ModelPoint {
  double r = 0.0;      // distance from the axis, >= 0
  double theta = 0.0;  // rescaled angle, reduced mod 2*pi
  double h = 0.0;      // distance along the axis

  ModelPoint() = default;
  ModelPoint(double r, double theta, double h);
};

// Inputs of the volume estimates around a basepoint: injectivity lower
// bound a, cone-angle floor omega (or 2*pi for the non-singular case),
// and working radius R.
struct InjectivityContext {
  double a;
  double omega;
  double R;

  InjectivityContext(double a, double omega, double R);
};

// sinh(sqrt(-K) r)/sqrt(-K), r at K = 0.  Series expansion near K = 0.
double sinh_k(Curvature K, double r);
// tanh(sqrt(-K) r)/sqrt(-K), r at K = 0.
double tanh_k(Curvature K, double r);
// Inverse of tanh_k in r.
double artanh_k(Curvature K, double y);
// cosh(sqrt(-K) r), 1 at K = 0.
double cosh_sqrt_k(Curvature K, double r);

struct FermiMetric {
  double g_rr;
  double g_thetatheta;
  double g_hh;
};

// Metric coefficients of the cone model in Fermi coordinates:
// (1, (alpha/2pi * sinh_k(r))^2, cosh^2(sqrt(-K) r)); the middle factor
// degenerates to (alpha/2pi * r)^2 and g_hh to 1 at K = 0.
FermiMetric fermi_metric_coeffs(Curvature K, ConeAngle alpha, double r);

// Volume of the ball of radius r in the simply connected space of
// curvature K; at singular alpha, the ball centered on the axis is the
// fraction alpha/2pi of the round ball.  Closed forms at K = 0 and
// K = -1, adaptive quadrature of 4*pi*sinh_k(t)^2 for interior K.
double ball_volume(Curvature K, ConeAngle alpha, double r);

// Same quantity, always through the quadrature route (no closed forms).
double ball_volume_quadrature(Curvature K, ConeAngle alpha, double r);

// 2*pi*sinh^2(R+1) * sigma_length, the volume bound for B(y, R+1) around
// a singular circle of the given length.
double tube_volume_bound(double R, double sigma_length);

struct InjectivityConstants {
  double c1;
  double c2;
  double delta1;
};

// c1 = minimum of the three per-case ball-volume lower bounds
// (non-singular, near-axis singular, far-from-axis), c2 = 2*pi*sinh^2(R+1),
// delta1 = c1/c2.  With omega == 2*pi only the non-singular case applies.
InjectivityConstants injectivity_constants(const InjectivityContext& ctx);

// Angle at the apex of a right triangle with the given adjacent leg and
// hypotenuse: arccos(tanh_k(d_adjacent)/tanh_k(d_hypotenuse)).
double right_triangle_angle(Curvature K, double d_adjacent,
                            double d_hypotenuse);

// Distance from the geodesic loop based at distance d from the cone point:
// d * cos(alpha/2).
double geodesic_loop_distance(ConeAngle alpha, double d);

struct ArcIterationBound {
  double step_bound;
  double cumulative_bound;
};

// Step n of the shrinking-arc iteration: step = artanh_k(2^-(n+1)),
// cumulative = sum_{i<=n} (step(i) + 2^-(i+1)).
ArcIterationBound arc_iteration_bound(int n, Curvature K);

// Minimal a with t^3/a <= V_{-1}(t) <= a t^3 on (0, interval_end], by
// numeric maximization of the two ratios (the upper one dominates and is
// attained at the right end).
double volume_comparison_constant(double interval_end = 8.0);

}  // namespace conewerk
