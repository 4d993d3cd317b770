#include "conewerk/smoothing.hpp"

#include <cmath>
#include <random>

#include "doctest.h"

using namespace conewerk;

TEST_CASE("boundary clauses are exact") {
  const auto p = build_smoothing(0.5, 1.0, 0.05);
  CHECK(p.value(0.02) == 0.02);
  CHECK(p.value(0.9) == 0.5 * (0.9 + 0.05));
  CHECK_FALSE(p.c1_at_knots);  // t = 1/2 is the corner boundary

  const auto q = build_smoothing(0.7, 1.0, 0.05);
  CHECK(q.c1_at_knots);
  CHECK(q.value(0.01) == 0.01);
  CHECK(q.value(0.8) == doctest::Approx(0.7 * 0.85).epsilon(1e-15));
}

TEST_CASE("rejections") {
  CHECK_THROWS(build_smoothing(1.0, 1.0, 0.05));
  CHECK_THROWS(build_smoothing(1.2, 1.0, 0.05));
  CHECK_THROWS(build_smoothing(0.0, 1.0, 0.05));
  CHECK_THROWS(build_smoothing(-0.3, 1.0, 0.05));
  CHECK_THROWS(build_smoothing(0.7, 1.0, 0.3));   // eps >= r0/4
  CHECK_THROWS(build_smoothing(0.4, 1.0, 0.05));  // below the feasible band
  CHECK_THROWS(build_smoothing(0.95, 1.0, 0.05)); // above r0/(r0+2 eps)

  // t close to 1 is fine once eps shrinks accordingly.
  const auto f = smoothing_feasibility(0.999, 1.0, 4e-4);
  CHECK(f.feasible);
  CHECK_NOTHROW(build_smoothing(0.999, 1.0, 4e-4));
}

namespace {

void check_profile(const SmoothingProfile& p) {
  const double end = p.domain_end();
  // Concavity by finite differences away from the knots.  The step is
  // coarse enough that double roundoff (4 eps |f| / h^2) stays below 1e-8.
  const double h = 1e-3;
  for (int i = 1; i < 400; ++i) {
    const double r = end * i / 400.0;
    if (r - h <= 0.0 || r + h >= end) continue;
    bool near_knot = false;
    for (double knot : {p.eps, p.knot_a, p.knot_b})
      if (std::abs(r - knot) < 2.0 * h) near_knot = true;
    if (near_knot) continue;
    const double second =
        (p.value(r + h) - 2.0 * p.value(r) + p.value(r - h)) / (h * h);
    CHECK(second <= 1e-8);
  }
  // C^0 and C^1 at the knots (interior profiles only).
  if (p.c1_at_knots) {
    for (double knot : {p.knot_a, p.knot_b}) {
      CHECK(std::abs(p.value(knot - 1e-9) - p.value(knot + 1e-9)) < 1e-8);
      CHECK(std::abs(p.derivative(knot - 1e-12) - p.derivative(knot + 1e-12)) <
            1e-8);
    }
  }
}

}  // namespace

TEST_CASE("random valid profiles are concave and C1") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> r0d(0.5, 3.0);
  for (int i = 0; i < 100; ++i) {
    const double r0 = r0d(rng);
    std::uniform_real_distribution<double> epsd(r0 / 100.0, r0 / 5.0);
    const double eps = epsd(rng);
    const double tmax = r0 / (r0 + 2.0 * eps);
    std::uniform_real_distribution<double> td(0.5 + 0.01, tmax - 0.01);
    const double t = td(rng);
    const auto p = build_smoothing(t, r0, eps);
    CHECK(p.c1_at_knots);
    check_profile(p);
    // Exact clauses on the closed-form pieces.
    CHECK(p.value(eps * 0.5) == eps * 0.5);
    const double plateau = 0.75 * r0 - eps;
    if (plateau > r0 / 2.0)
      CHECK(p.value(plateau) == t * (plateau + eps));
  }
}

TEST_CASE("warped curvature") {
  const auto p = build_smoothing(0.7, 1.0, 0.05);

  // Flat inside the identity piece and along the linear plateau, up to the
  // finite-difference noise floor.
  CHECK(std::abs(warped_curvature(p, 0.02)) < 5e-9);
  CHECK(std::abs(warped_curvature(p, 0.8)) < 5e-9);

  // Positive somewhere inside the transition arc.
  const double mid = 0.5 * (p.knot_a + p.knot_b);
  const double curv = warped_curvature(p, mid);
  CHECK(curv > 0.0);
  CHECK(curv > 1e-3 * (1.0 - p.t) / p.r0);

  // Never negative beyond tolerance anywhere it is defined.
  for (int i = 1; i < 300; ++i) {
    const double r = p.domain_end() * i / 300.0;
    bool at_knot = false;
    for (double knot : {p.eps, p.knot_a, p.knot_b})
      if (std::abs(r - knot) < 1e-6) at_knot = true;
    if (at_knot || r <= 0.0 || r >= p.domain_end()) continue;
    CHECK(warped_curvature(p, r) >= -1e-8);
  }

  CHECK_THROWS(warped_curvature(p, p.knot_a));
  CHECK_THROWS(warped_curvature(p, p.r0));
}
