#include "conewerk/model_spaces.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "conewerk/quadrature.hpp"

namespace conewerk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Below this |K| the direct formulas lose digits to cancellation; switch
// to the series in K.
constexpr double kSeriesK = 1e-6;

}  // namespace

Curvature::Curvature(double k) : k_(k) {
  if (!(k >= -1.0 && k <= 0.0))
    throw std::domain_error("curvature must lie in [-1, 0]");
}

ConeAngle::ConeAngle(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha <= kTwoPi + 1e-12))
    throw std::domain_error("cone angle must lie in (0, 2*pi]");
  alpha_ = std::min(alpha, kTwoPi);
}

bool ConeAngle::is_nonsingular() const { return alpha_ >= kTwoPi - 1e-12; }

ModelPoint::ModelPoint(double r_, double theta_, double h_)
    : r(r_), theta(theta_), h(h_) {
  if (!(r >= 0.0)) throw std::domain_error("model point needs r >= 0");
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;
}

InjectivityContext::InjectivityContext(double a_, double omega_, double R_)
    : a(a_), omega(omega_), R(R_) {
  if (!(a > 0.0)) throw std::domain_error("a must be > 0");
  if (!(R > 0.0)) throw std::domain_error("R must be > 0");
  const bool singular_floor = omega > 0.0 && omega <= kPi;
  const bool nonsingular = std::abs(omega - kTwoPi) <= 1e-12;
  if (!singular_floor && !nonsingular)
    throw std::domain_error("omega must lie in (0, pi] or equal 2*pi");
}

double sinh_k(Curvature K, double r) {
  const double k = K.value();
  if (k == 0.0) return r;
  if (-k < kSeriesK) {
    const double r2 = r * r;
    return r * (1.0 - k * r2 / 6.0 + k * k * r2 * r2 / 120.0);
  }
  const double s = std::sqrt(-k);
  return std::sinh(s * r) / s;
}

double tanh_k(Curvature K, double r) {
  const double k = K.value();
  if (k == 0.0) return r;
  if (-k < kSeriesK) {
    const double r2 = r * r;
    return r * (1.0 + k * r2 / 3.0 + 2.0 * k * k * r2 * r2 / 15.0);
  }
  const double s = std::sqrt(-k);
  return std::tanh(s * r) / s;
}

double artanh_k(Curvature K, double y) {
  const double k = K.value();
  if (k == 0.0) return y;
  if (-k < kSeriesK) {
    const double y2 = y * y;
    return y * (1.0 - k * y2 / 3.0 + k * k * y2 * y2 / 5.0);
  }
  const double s = std::sqrt(-k);
  if (!(s * y < 1.0)) throw std::domain_error("artanh_k: argument out of range");
  return std::atanh(s * y) / s;
}

double cosh_sqrt_k(Curvature K, double r) {
  const double k = K.value();
  if (k == 0.0) return 1.0;
  return std::cosh(std::sqrt(-k) * r);
}

FermiMetric fermi_metric_coeffs(Curvature K, ConeAngle alpha, double r) {
  if (!(r >= 0.0)) throw std::domain_error("r must be >= 0");
  const double radial = alpha.turn_fraction() * sinh_k(K, r);
  const double gh = cosh_sqrt_k(K, r);
  return FermiMetric{1.0, radial * radial, gh * gh};
}

namespace {

double round_ball_volume(Curvature K, double r) {
  const double k = K.value();
  if (k == 0.0) return 4.0 / 3.0 * kPi * r * r * r;
  if (k == -1.0) return kPi * (std::sinh(2.0 * r) - 2.0 * r);
  return integrate_adaptive(
      [K](double t) {
        const double s = sinh_k(K, t);
        return 4.0 * kPi * s * s;
      },
      0.0, r, 1e-10);
}

}  // namespace

double ball_volume(Curvature K, ConeAngle alpha, double r) {
  if (!(r >= 0.0)) throw std::domain_error("r must be >= 0");
  return alpha.turn_fraction() * round_ball_volume(K, r);
}

double ball_volume_quadrature(Curvature K, ConeAngle alpha, double r) {
  if (!(r >= 0.0)) throw std::domain_error("r must be >= 0");
  if (r == 0.0) return 0.0;
  const double round = integrate_adaptive(
      [K](double t) {
        const double s = sinh_k(K, t);
        return 4.0 * kPi * s * s;
      },
      0.0, r, 1e-10);
  return alpha.turn_fraction() * round;
}

double tube_volume_bound(double R, double sigma_length) {
  if (!(R >= 0.0)) throw std::domain_error("R must be >= 0");
  if (!(sigma_length > 0.0)) throw std::domain_error("length must be > 0");
  const double s = std::sinh(R + 1.0);
  return kTwoPi * s * s * sigma_length;
}

InjectivityConstants injectivity_constants(const InjectivityContext& ctx) {
  const double a0_nonsing = std::min(1.0, ctx.a);
  double c1 = 4.0 / 3.0 * kPi * a0_nonsing * a0_nonsing * a0_nonsing;

  if (std::abs(ctx.omega - kTwoPi) > 1e-12) {
    // Near-axis singular ball.
    const double a0 = std::min(0.5, ctx.a);
    const double near_axis = 2.0 / 3.0 * ctx.omega * a0 * a0 * a0;
    // Far-from-axis: the largest non-singular ball fits the sector
    // half-width b at distance 1/2, halved for the hyperbolic case.
    const double b = std::min(ctx.a, 0.5) * std::sin(ctx.omega / 2.0) / 2.0;
    const double b0 = std::min(b, 1.0);
    const double far_axis = 4.0 / 3.0 * kPi * b0 * b0 * b0;
    c1 = std::min({c1, near_axis, far_axis});
  }

  const double sh = std::sinh(ctx.R + 1.0);
  const double c2 = kTwoPi * sh * sh;
  return InjectivityConstants{c1, c2, c1 / c2};
}

double right_triangle_angle(Curvature K, double d_adjacent,
                            double d_hypotenuse) {
  if (!(d_adjacent >= 0.0) || !(d_hypotenuse >= d_adjacent))
    throw std::domain_error(
        "right triangle needs 0 <= d_adjacent <= d_hypotenuse");
  if (d_hypotenuse == 0.0) return 0.0;
  const double ratio = tanh_k(K, d_adjacent) / tanh_k(K, d_hypotenuse);
  return std::acos(std::clamp(ratio, -1.0, 1.0));
}

double geodesic_loop_distance(ConeAngle alpha, double d) {
  if (!(d >= 0.0)) throw std::domain_error("d must be >= 0");
  if (alpha.is_nonsingular())
    throw std::domain_error("geodesic loop needs a cone angle < 2*pi");
  return d * std::cos(alpha.value() / 2.0);
}

double volume_comparison_constant(double interval_end) {
  if (!(interval_end > 0.0)) throw std::domain_error("interval end must be > 0");
  const Curvature hyp(-1.0);
  const ConeAngle full(kTwoPi);
  double a = 3.0 / (4.0 * kPi);  // limit of t^3 / V as t -> 0
  for (int i = 1; i <= 4096; ++i) {
    const double t = interval_end * i / 4096.0;
    const double v = ball_volume(hyp, full, t);
    const double t3 = t * t * t;
    a = std::max({a, v / t3, t3 / v});
  }
  return a;
}

ArcIterationBound arc_iteration_bound(int n, Curvature K) {
  if (n < 0) throw std::domain_error("n must be >= 0");
  double cumulative = 0.0;
  double step = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double tail = std::ldexp(1.0, -(i + 1));
    step = artanh_k(K, tail);
    cumulative += step + tail;
  }
  return ArcIterationBound{step, cumulative};
}

}  // namespace conewerk
