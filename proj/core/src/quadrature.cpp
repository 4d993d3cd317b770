#include "conewerk/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace conewerk {
namespace {

constexpr int kOrder = 24;

struct GaussRule {
  std::array<double, kOrder> node{};
  std::array<double, kOrder> weight{};
};

// Nodes and weights on [-1,1] by Newton iteration on the Legendre
// recurrence, seeded with the Chebyshev approximation of the roots.
GaussRule make_rule() {
  GaussRule rule;
  const int n = kOrder;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.node[i] = -x;
    rule.node[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weight[i] = w;
    rule.weight[n - 1 - i] = w;
  }
  return rule;
}

const GaussRule& rule() {
  static const GaussRule r = make_rule();
  return r;
}

double panel(const std::function<double(double)>& f, double a, double b) {
  const GaussRule& r = rule();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0, comp = 0.0;  // Kahan
  for (int i = 0; i < kOrder; ++i) {
    double term = r.weight[i] * f(mid + half * r.node[i]) - comp;
    double t = acc + term;
    comp = (t - acc) - term;
    acc = t;
  }
  return acc * half;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double whole, double tol, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = panel(f, a, mid);
  const double right = panel(f, mid, b);
  const double diff = left + right - whole;
  // The requested tolerance may sit below roundoff for large integrands;
  // never subdivide past machine precision of the running estimate.
  const double floor = 8.0 * 1e-16 * std::abs(left + right);
  if (std::abs(diff) <= std::max(tol, floor) || depth >= 28)
    return left + right;
  return adapt(f, a, mid, left, 0.5 * tol, depth + 1) +
         adapt(f, mid, b, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol) {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("abs_tol must be > 0");
  if (a == b) return 0.0;
  return adapt(f, a, b, panel(f, a, b), abs_tol, 0);
}

}  // namespace conewerk
