#include <cmath>
#include <numbers>
#include <random>

#include "conewerk/constants.hpp"
#include "conewerk/covering.hpp"
#include "conewerk/nerve.hpp"
#include "conewerk/sampled_space.hpp"
#include "doctest.h"

using namespace conewerk;

namespace {
constexpr double kPi = std::numbers::pi;

SampledSpace line_space(const std::vector<double>& coords,
                        double radius = 0.3) {
  const std::size_t n = coords.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = std::abs(coords[i] - coords[j]);
  auto oracle = [](std::size_t, double r) {
    return 4.0 / 3.0 * kPi * r * r * r;
  };
  return SampledSpace(std::move(d), std::vector<double>(n, radius), oracle);
}

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> o(n);
  for (std::size_t i = 0; i < n; ++i) o[i] = i;
  return o;
}
}  // namespace

TEST_CASE("greedy maximal packing") {
  SUBCASE("single point space") {
    const auto space = line_space({0.0});
    const auto centers = greedy_maximal_packing(space, identity_order(1));
    CHECK(centers == std::vector<std::size_t>{0});
  }

  SUBCASE("flat torus grid: packing and covering duality") {
    const auto space = flat_torus_grid(5, 0.3);
    const auto centers = greedy_maximal_packing(space, identity_order(125));
    REQUIRE_FALSE(centers.empty());
    // Quarter balls disjoint.
    for (std::size_t a = 0; a < centers.size(); ++a)
      for (std::size_t b = a + 1; b < centers.size(); ++b)
        CHECK(space.d(centers[a], centers[b]) >= 0.15 - 1e-12);
    // 2/3-balls cover every grid point.
    for (std::size_t q = 0; q < space.size(); ++q) {
      bool covered = false;
      for (std::size_t c : centers)
        if (space.d(q, c) <= 0.2 + 1e-12) covered = true;
      CHECK(covered);
    }
    // Count bounded between the packing and covering extremes.
    CHECK(centers.size() >= 1.0 / (4.0 / 3.0 * kPi * 0.2 * 0.2 * 0.2));
    CHECK(centers.size() <= 1.0 / (4.0 / 3.0 * kPi * 0.075 * 0.075 * 0.075));
  }

  SUBCASE("mandatory points must pack") {
    const auto space = line_space({0.0, 0.05, 1.0});
    CHECK_THROWS(greedy_maximal_packing(space, identity_order(3), {0, 1}));
    CHECK_NOTHROW(greedy_maximal_packing(space, identity_order(3), {0, 2}));
  }
}

TEST_CASE("build and verify covering on the flat torus") {
  const auto space = flat_torus_grid(5, 0.3);
  const auto centers = greedy_maximal_packing(space, identity_order(125));
  const auto cov = build_covering(space, centers);
  auto rep = verify_covering(space, cov);

  CHECK(rep.contained_radius_ok);
  CHECK(rep.ratio_ok);
  CHECK(rep.quarter_disjoint_ok);
  CHECK(rep.deep_point_ok);
  CHECK(rep.tubes_unique_ok);
  CHECK(rep.min_eta == doctest::Approx(4.0 / 3.0 * kPi).epsilon(1e-12));

  SUBCASE("perturbing one radius breaks property 2") {
    Covering bad = cov;
    bad.radii[0] *= 2.0;
    const auto bad_rep = verify_covering(space, bad);
    CHECK_FALSE(bad_rep.ratio_ok);
  }
}

TEST_CASE("lipschitz-compatible radius functions keep the ratio bounds") {
  // |r(x)-r(y)| <= d(x,y)/8, as in the ab/8 construction.
  const auto base = flat_torus_grid(4, 0.3);
  const std::size_t n = base.size();
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dist[i][j] = base.d(i, j);
  std::vector<double> radius(n);
  for (std::size_t i = 0; i < n; ++i)
    radius[i] = std::min(1.0, 0.2 + base.d(i, 0) / 8.0);
  auto oracle = [](std::size_t, double r) {
    return 4.0 / 3.0 * kPi * r * r * r;
  };
  const SampledSpace space(std::move(dist), std::move(radius), oracle);

  const auto centers = greedy_maximal_packing(space, identity_order(n));
  const auto cov = build_covering(space, centers);
  const auto rep = verify_covering(space, cov);
  CHECK(rep.ratio_ok);
  CHECK(rep.quarter_disjoint_ok);
  CHECK(rep.deep_point_ok);
}

TEST_CASE("covering with singular tubes") {
  auto space = flat_torus_grid(5, 0.3);
  // Two tiny components, one grid point each (diameter < r/9).
  space.mark_singular_component(7, {0});
  space.mark_singular_component(8, {62});

  const double mu = 0.3 / 18.0 - 1e-6;
  const auto centers =
      greedy_maximal_packing(space, identity_order(125), {0, 62});
  const auto cov =
      build_covering(space, centers, CoveringMode::ExcludeSingularTubes, mu);
  const auto rep = verify_covering(space, cov);
  CHECK(rep.tubes_unique_ok);
  CHECK(rep.deep_point_ok);

  SUBCASE("mu too large is rejected") {
    CHECK_THROWS(build_covering(space, centers,
                                CoveringMode::ExcludeSingularTubes, 0.1));
  }
}

TEST_CASE("covering with an anchor") {
  auto space = flat_torus_grid(5, 0.3);
  space.set_anchor({42});
  const auto centers = greedy_maximal_packing(space, identity_order(125), {42});
  const auto cov = build_covering(space, centers, CoveringMode::ExcludeAnchor);
  const auto rep = verify_covering(space, cov);
  CHECK(rep.tubes_unique_ok);
  CHECK(rep.deep_point_ok);

  // Anchor kept by its ball and excluded from all others.
  for (std::size_t i = 0; i < cov.set_count(); ++i)
    CHECK(cov.membership[i][42] == (i == 0));

  SUBCASE("anchor outside B(x0, r0/9) is rejected") {
    auto bad = flat_torus_grid(5, 0.3);
    bad.set_anchor({42, 44});  // second point 0.4 away
    const auto c2 = greedy_maximal_packing(bad, identity_order(125), {42});
    CHECK_THROWS(build_covering(bad, c2, CoveringMode::ExcludeAnchor));
  }
}

TEST_CASE("nerve complexes") {
  SUBCASE("two disjoint balls") {
    const auto space = line_space({0.0, 1.0}, 0.3);
    const auto cov = build_covering(space, {0, 1});
    const auto K = nerve(cov);
    CHECK(K.vertex_count() == 2);
    CHECK(K.dimension() == 0);
    CHECK(K.edge_list().empty());
  }

  SUBCASE("chain of three balls with empty triple intersection") {
    const auto space =
        line_space({0.0, 0.175, 0.35, 0.525, 0.7}, 0.3);
    const auto cov = build_covering(space, {0, 2, 4});
    const auto K = nerve(cov);
    CHECK(K.vertex_count() == 3);
    CHECK(K.dimension() == 1);
    CHECK(K.edge_list().size() == 2);
    CHECK(K.has_simplex({0, 1}));
    CHECK(K.has_simplex({1, 2}));
    CHECK_FALSE(K.has_simplex({0, 2}));
    CHECK_FALSE(K.has_simplex({0, 1, 2}));
    CHECK(K.to_dot().find("v0 -- v1") != std::string::npos);
  }

  SUBCASE("flat torus nerve dimension stays under the ledger bound") {
    const auto space = flat_torus_grid(5, 0.3);
    const auto cov =
        build_covering(space, greedy_maximal_packing(space, identity_order(125)));
    const auto K = nerve(cov);
    CHECK(K.dimension() <= nerve_dimension_bound());
    CHECK(K.dimension() >= 1);
  }
}

TEST_CASE("bump function") {
  CHECK(bump(-1.0) == 0.0);
  CHECK(bump(0.0) == 0.0);
  CHECK(bump(1.0 / 3.0) == 1.0);
  CHECK(bump(2.0) == 1.0);
  CHECK(bump(1.0 / 6.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(bump(1.0 / 6.0) > 0.0);
  CHECK(bump(1.0 / 6.0) < 1.0);

  double max_slope = 0.0;
  double prev = bump(-0.1);
  const int grid = 100000;
  for (int i = 1; i <= grid; ++i) {
    const double t = -0.1 + 0.6 * i / grid;
    const double v = bump(t);
    CHECK(v >= prev - 1e-15);  // monotone ramp
    max_slope = std::max(max_slope, std::abs(bump_derivative(t)));
    // Derivative consistent with finite differences.
    if (i % 997 == 0) {
      const double fd = (bump(t + 1e-7) - bump(t - 1e-7)) / 2e-7;
      CHECK(std::abs(fd - bump_derivative(t)) < 1e-5);
    }
    prev = v;
  }
  CHECK(max_slope <= 4.0);
}

TEST_CASE("partition of unity map") {
  SUBCASE("deep single-set point maps to a vertex") {
    const auto space = line_space({0.0, 1.0}, 0.3);
    const auto cov = build_covering(space, {0, 1});
    const auto f = partition_map(cov, 0);
    REQUIRE(f.support.size() == 1);
    CHECK(f.support[0] == 0);
    CHECK(f.coords[0] == 1.0);
  }

  SUBCASE("symmetric double point maps to the edge midpoint") {
    const auto space = line_space({0.0, 0.175, 0.35}, 0.3);
    const auto cov = build_covering(space, {0, 2});
    const auto f = partition_map(cov, 1);
    REQUIRE(f.support.size() == 2);
    CHECK(f.coords[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(f.coords[1] == doctest::Approx(0.5).epsilon(1e-12));
  }

  SUBCASE("property-4 violation is signalled") {
    const auto space = line_space({0.0, 0.29}, 0.3);
    const auto cov = build_covering(space, {0});
    CHECK_THROWS(partition_map(cov, 1));
  }

  SUBCASE("empirical lipschitz ratio against xi_k") {
    const auto space = flat_torus_grid(5, 0.3);
    const auto centers = greedy_maximal_packing(space, identity_order(125));
    const auto cov = build_covering(space, centers);
    const auto K = nerve(cov);
    const auto led = constants();
    const double xik = led.xi(K.dimension());
    const std::size_t p = cov.set_count();
    const std::size_t n = space.size();

    std::vector<BarycentricPoint> mapped;
    for (std::size_t q = 0; q < n; ++q)
      mapped.push_back(partition_map(cov, q));

    // Set intersections witnessed on the sample, then per-set unions.
    std::vector<std::vector<bool>> meets(p, std::vector<bool>(p, false));
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t i = 0; i < p; ++i)
        if (cov.membership[i][q])
          for (std::size_t j = 0; j < p; ++j)
            if (cov.membership[j][q]) meets[i][j] = true;

    for (std::size_t i = 0; i < p; i += 7) {
      std::vector<std::size_t> hood;
      for (std::size_t q = 0; q < n; ++q) {
        bool in = false;
        for (std::size_t j = 0; j < p && !in; ++j)
          if (cov.membership[j][q] && meets[i][j]) in = true;
        if (in) hood.push_back(q);
      }
      const double bound = xik / cov.radii[i] * 1.05;
      std::mt19937_64 rng(71 + i);
      for (int t = 0; t < 200; ++t) {
        const std::size_t a = hood[rng() % hood.size()];
        const std::size_t b = hood[rng() % hood.size()];
        if (a == b) continue;
        const double lip =
            barycentric_distance(mapped[a], mapped[b]) / space.d(a, b);
        CHECK(lip <= bound);
      }
    }
  }
}

TEST_CASE("retraction to a skeleton") {
  SUBCASE("samples already low-dimensional are fixed") {
    std::vector<BarycentricPoint> pts{{{0, 1}, {0.5, 0.5}},
                                      {{2}, {1.0}},
                                      {{0, 3, 4}, {0.2, 0.3, 0.5}}};
    const auto res = retract_to_skeleton(pts, 2);
    CHECK(res.ok);
    CHECK(res.pushes == 0);
    CHECK(res.samples[0].support == std::vector<int>{0, 1});
  }

  SUBCASE("single interior 3-simplex point lands on the boundary") {
    std::vector<BarycentricPoint> pts{
        {{0, 1, 2, 3}, {0.4, 0.3, 0.2, 0.1}}};
    const auto res = retract_to_skeleton(pts, 2);
    REQUIRE(res.ok);
    CHECK(res.pushes == 1);
    REQUIRE(res.samples[0].support.size() <= 3);
    double sum = 0.0;
    for (double c : res.samples[0].coords) {
      CHECK(c >= 0.0);
      sum += c;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("cascading from dimension 4 to 2") {
    std::vector<BarycentricPoint> pts{
        {{0, 1, 2, 3, 4}, {0.25, 0.30, 0.20, 0.15, 0.10}},
        {{1, 2, 3, 4}, {0.4, 0.1, 0.3, 0.2}}};
    const auto res = retract_to_skeleton(pts, 2);
    REQUIRE(res.ok);
    for (const auto& s : res.samples) CHECK(s.support.size() <= 3);
  }

  SUBCASE("dense fill aborts with a gap failure") {
    // A sample on (or near) every interior lattice point of the 3-simplex.
    std::vector<BarycentricPoint> pts;
    for (int a = 1; a <= 13; ++a)
      for (int b = 1; a + b <= 14; ++b)
        for (int c = 1; a + b + c <= 15; ++c) {
          const int d = 16 - a - b - c;
          pts.push_back(
              {{0, 1, 2, 3}, {a / 16.0, b / 16.0, c / 16.0, d / 16.0}});
        }
    const auto res = retract_to_skeleton(pts, 2, 1e-3);
    CHECK_FALSE(res.ok);
    CHECK(res.failure.find("3-simplex") != std::string::npos);
  }
}

TEST_CASE("star preimage preserved through the pipeline") {
  const auto space = flat_torus_grid(5, 0.3);
  const auto centers = greedy_maximal_packing(space, identity_order(125));
  const auto cov = build_covering(space, centers);

  std::vector<BarycentricPoint> mapped;
  std::vector<std::size_t> pts;
  for (std::size_t q = 0; q < space.size(); ++q) {
    mapped.push_back(partition_map(cov, q));
    pts.push_back(q);
  }
  CHECK(star_preimage_preserved(cov, mapped, pts));

  const auto res = retract_to_skeleton(mapped, 2);
  REQUIRE(res.ok);
  CHECK(star_preimage_preserved(cov, res.samples, pts));
}

TEST_CASE("constants ledger") {
  const auto led = constants();

  // Frozen oracle values computed from the defining formulas.
  const double a_expected = kPi * (std::sinh(16.0) - 16.0) / 512.0;
  CHECK(led.a == doctest::Approx(a_expected).epsilon(1e-9));

  const double n_expected =
      (std::sinh(16.0) - 16.0) / (std::sinh(0.5) - 0.5);
  CHECK(double(led.N) == doctest::Approx(std::ceil(n_expected)).epsilon(1e-12));

  CHECK(led.xi(3) == doctest::Approx(16.0 * std::sqrt(8.0) / 3.0)
                         .epsilon(1e-15));
  CHECK(std::abs(led.xi(3) - 15.084944665313014) < 1e-12);

  // b1 = 2^21 b0 exactly; D floors hold.
  CHECK(led.b1 == std::ldexp(led.b0, 21));
  CHECK(led.D0 >= 300.0);
  CHECK(led.D1 >= 1e4);
  CHECK(led.b0 == doctest::Approx(std::ldexp(kPi * led.a * led.a, 15))
                      .epsilon(1e-15));

  // eta0 sits strictly below the bound.
  const double bound = standard_simplex_volume(3) /
                       (double(led.N + 1) * std::pow(4.0 * led.xi(3) / 3.0, 3));
  CHECK(led.eta0 < bound);
  CHECK(led.eta0 > 0.0);

  CHECK(standard_simplex_volume(3) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  // Internal consistency: D0 = max(b0/eta0, 300) etc.
  CHECK(led.D0 == doctest::Approx(std::max(led.b0 / led.eta0, 300.0)));
  CHECK(led.D1 == doctest::Approx(std::max(led.b1 / led.eta0, 1e4)));

  // epsilon_k decreases with larger c2 structure and needs k > 3.
  CHECK_THROWS(led.epsilon_k(3, 1.0));
  CHECK(led.epsilon_k(4, 1.0) > 0.0);
}

TEST_CASE("margulis radius floors") {
  CHECK(margulis_radius_floor(1.0, MargulisCase::AnchorB) == 1.0 / 16.0);
  CHECK(margulis_radius_floor(1.0, MargulisCase::AbelianFar) == 1.0 / 128.0);
  // Worst-case anchor radius nu0 = nu/2 reproduces nu/2^11 exactly.
  CHECK(margulis_radius_floor(1.0, MargulisCase::AbelianNear, 0.5, 2e4) ==
        1.0 / 2048.0);
  // The spec example: nu_i = 1, nu0 = 32 stays above the universal floor.
  CHECK(margulis_radius_floor(1.0, MargulisCase::AbelianNear, 32.0, 2e4) >=
        1.0 / 2048.0);
  CHECK_THROWS(margulis_radius_floor(1.0, MargulisCase::AbelianNear, 0.5, 10.0));
  CHECK_THROWS(margulis_radius_floor(-1.0, MargulisCase::AnchorB));
}
