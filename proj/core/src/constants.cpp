#include "conewerk/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "conewerk/model_spaces.hpp"

namespace conewerk {

namespace {
constexpr double kPi = std::numbers::pi;

double v_hyp(double r) { return kPi * (std::sinh(2.0 * r) - 2.0 * r); }
}  // namespace

double ConstantsLedger::xi(int k) const {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  return 16.0 * std::sqrt(2.0 * (k + 1)) / 3.0;
}

double ConstantsLedger::epsilon_k(int k, double c1) const {
  if (k <= 3) throw std::invalid_argument("epsilon_k needs k > 3");
  if (!(c1 > 0.0)) throw std::invalid_argument("c1 must be > 0");
  const double xik = xi(k);
  const double c2 = 4096.0 * a * a * xik * xik * xik;  // 2^12 a^2 xi_k^3
  return std::pow(c1 / c2, 1.0 / double(k - 3));
}

long long nerve_dimension_bound() {
  // sup over (0,1] of V(8r)/V(r/4); the ratio is increasing, but scan
  // anyway and keep the max.
  double sup = 32768.0;  // r -> 0 limit (8r)^3/(r/4)^3
  for (int i = 1; i <= 4096; ++i) {
    const double r = double(i) / 4096.0;
    sup = std::max(sup, v_hyp(8.0 * r) / v_hyp(r / 4.0));
  }
  return static_cast<long long>(std::ceil(sup));
}

double standard_simplex_volume(int k) {
  if (k < 0) throw std::invalid_argument("dimension must be >= 0");
  // Regular k-simplex of edge sqrt(2): sqrt(k+1)/k!.
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  return std::sqrt(double(k + 1)) / fact;
}

ConstantsLedger constants(double a_interval_end) {
  ConstantsLedger led;
  led.a_interval_end = a_interval_end;
  led.a = volume_comparison_constant(a_interval_end);
  led.N = nerve_dimension_bound();

  const double xi3 = led.xi(3);
  const double bound =
      standard_simplex_volume(3) /
      (double(led.N + 1) * std::pow(4.0 * xi3 / 3.0, 3.0));
  led.eta0 = 0.5 * bound;  // strictly below the required bound

  const double m = kPi * led.a * led.a;
  led.b0 = std::ldexp(m, 15);
  led.b1 = std::ldexp(m, 36);  // exactly 2^21 * b0
  led.D0 = std::max(led.b0 / led.eta0, 300.0);
  led.D1 = std::max(led.b1 / led.eta0, 1e4);
  return led;
}

double margulis_radius_floor(double nu, MargulisCase c, double nu0, double D) {
  if (!(nu > 0.0)) throw std::invalid_argument("nu must be > 0");
  switch (c) {
    case MargulisCase::AnchorB:
      return nu / 16.0;
    case MargulisCase::AbelianFar:
      return nu / 128.0;
    case MargulisCase::AbelianNear:
      if (!(D > 1e4))
        throw std::invalid_argument("near case requires D > 1e4");
      if (!(nu0 > 0.0)) throw std::invalid_argument("nu0 must be > 0");
      return std::min(nu / 16.0, nu0 / 1024.0);
  }
  throw std::logic_error("unreachable");
}

}  // namespace conewerk
