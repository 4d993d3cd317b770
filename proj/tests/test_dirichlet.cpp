#include "conewerk/dirichlet.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

using namespace conewerk;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<Isometry> z3_generators() {
  return {Isometry::translation(Vec3::UnitX()),
          Isometry::translation(Vec3::UnitY()),
          Isometry::translation(Vec3::UnitZ())};
}
}  // namespace

TEST_CASE("isometry group operations") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> d(-1.0, 1.0);

  SUBCASE("euclidean compose and invert") {
    for (int i = 0; i < 50; ++i) {
      const Vec3 axis = Vec3(d(rng), d(rng), d(rng)).normalized();
      const Isometry g = Isometry::screw(axis, d(rng), d(rng) * kPi);
      CHECK(g.is_valid(1e-9));
      CHECK(g.compose(g.inverse()).is_identity(1e-9));
      CHECK(g.inverse().compose(g).is_identity(1e-9));
    }
    const Isometry t1 = Isometry::translation(Vec3(1, 2, 3));
    const Isometry t2 = Isometry::translation(Vec3(-4, 0, 1));
    CHECK(t1.compose(t2).approx_equal(Isometry::translation(Vec3(-3, 2, 4)),
                                      1e-12));
  }

  SUBCASE("lorentz validity and rapidity additivity") {
    const Isometry b1 = Isometry::boost(Vec3::UnitX(), 0.8);
    const Isometry b2 = Isometry::boost(Vec3::UnitX(), 1.3);
    CHECK(b1.is_valid(1e-9));
    CHECK(b1.compose(b2).approx_equal(Isometry::boost(Vec3::UnitX(), 2.1),
                                      1e-9));
    CHECK(b1.compose(b1.inverse()).is_identity(1e-9));
    for (int i = 0; i < 50; ++i) {
      const Vec3 dir = Vec3(d(rng), d(rng), d(rng)).normalized();
      const Isometry g =
          Isometry::boost(dir, d(rng)).compose(Isometry::lorentz_rotation_z(d(rng)));
      CHECK(g.is_valid(1e-9));
      CHECK(g.compose(g.inverse()).is_identity(1e-9));
    }
  }

  SUBCASE("kind mismatch is rejected") {
    CHECK_THROWS(Isometry::translation(Vec3::UnitX())
                     .compose(Isometry::boost(Vec3::UnitX(), 1.0)));
  }

  SUBCASE("hyperboloid chart round trip") {
    for (int i = 0; i < 100; ++i) {
      Vec3 u(d(rng), d(rng), d(rng));
      u *= 0.9 / std::max(1.0, u.norm());
      CHECK((klein_from_hyperboloid(hyperboloid_from_klein(u)) - u).norm() <
            1e-12);
    }
    // Klein distance along a diameter is the rapidity.
    CHECK(klein_distance(Vec3::Zero(), Vec3(std::tanh(1.7), 0, 0)) ==
          doctest::Approx(1.7).epsilon(1e-12));
  }
}

TEST_CASE("bisector half-spaces") {
  SUBCASE("euclidean perpendicular bisector") {
    const auto hs =
        bisector(Isometry::translation(Vec3(2, 0, 0)), Vec3::Zero());
    CHECK(hs.normal.isApprox(Vec3::UnitX(), 1e-12));
    CHECK(hs.offset == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(hs.signed_distance(Vec3::Zero()) < 0.0);  // x strictly inside
  }

  SUBCASE("reflection through the basepoint") {
    const Isometry g = Isometry::translation(Vec3(0, 3, 0));
    const auto plus = bisector(g, Vec3::Zero());
    const auto minus = bisector(g.inverse(), Vec3::Zero());
    CHECK(plus.normal.isApprox(-minus.normal, 1e-12));
    CHECK(plus.offset == doctest::Approx(minus.offset).epsilon(1e-12));
  }

  SUBCASE("lorentz boost bisector is halfway along the axis") {
    const auto hs = bisector(Isometry::boost(Vec3::UnitX(), 2.0), Vec3::Zero());
    // Equidistant surface crosses the axis at rapidity 1: Klein x = tanh(1).
    CHECK(hs.normal.isApprox(Vec3::UnitX(), 1e-12));
    CHECK(hs.offset == doctest::Approx(std::tanh(1.0)).epsilon(1e-12));
    // Independent check: points on the bisector are metrically equidistant.
    const Vec3 y(std::tanh(1.0), 0.3, -0.2);
    const Vec4 y4 = hyperboloid_from_klein(y);
    const Vec4 x4 = hyperboloid_from_klein(Vec3::Zero());
    const Vec4 gx4 = Isometry::boost(Vec3::UnitX(), 2.0).apply(x4);
    CHECK(std::abs(hs.signed_distance(y)) < 1e-12);
    CHECK(hyperbolic_distance(y4, x4) ==
          doctest::Approx(hyperbolic_distance(y4, gx4)).epsilon(1e-10));
  }

  CHECK_THROWS(bisector(Isometry::identity(Isometry::Kind::Euclidean),
                        Vec3::Zero()));
}

TEST_CASE("convex polyhedron clipping") {
  auto box = ConvexPolyhedron::box(Vec3::Zero(), 1.0);
  CHECK(box.volume_from(Vec3::Zero()) == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(box.vertices().size() == 8);

  HalfSpace cut;
  cut.normal = Vec3::UnitX();
  cut.offset = 0.0;
  CHECK(box.clip(cut));
  CHECK(box.volume_from(Vec3(-0.5, 0, 0)) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(box.faces().size() == 6);

  // Corner cut: tetrahedral corner of volume (1/6)s^3 removed.
  HalfSpace corner;
  corner.normal = Vec3(1, 1, 1).normalized();
  corner.offset = (0.0 + 1.0 + 1.0 - 0.5) / std::sqrt(3.0);
  CHECK(box.clip(corner));
  CHECK(box.volume_from(Vec3(-0.5, 0, 0)) ==
        doctest::Approx(4.0 - 0.5 * 0.5 * 0.5 / 6.0).epsilon(1e-10));

  // Random clip sequences keep volume consistent with a Monte Carlo oracle.
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    auto poly = ConvexPolyhedron::box(Vec3::Zero(), 1.0);
    std::vector<HalfSpace> planes;
    for (int c = 0; c < 6; ++c) {
      HalfSpace hs;
      hs.normal = Vec3(d(rng), d(rng), d(rng));
      if (hs.normal.norm() < 1e-6) continue;
      hs.normal.normalize();
      hs.offset = 0.2 + 0.6 * std::abs(d(rng));
      planes.push_back(hs);
      poly.clip(hs);
    }
    REQUIRE_FALSE(poly.empty());
    const double exact = poly.volume_from(Vec3::Zero());
    std::mt19937_64 mc(trial);
    std::uniform_real_distribution<double> box01(-1.0, 1.0);
    int hits = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
      const Vec3 u(box01(mc), box01(mc), box01(mc));
      bool in = true;
      for (const auto& hs : planes)
        if (hs.signed_distance(u) > 0.0) in = false;
      if (in) ++hits;
    }
    const double mc_vol = 8.0 * hits / n;
    CHECK(std::abs(exact - mc_vol) < 0.1);
  }
}

TEST_CASE("dirichlet domain: Z^3 unit cube") {
  DirichletOptions opts;
  opts.cutoff = 2.0;
  opts.max_word_length = 4;
  const auto dom = dirichlet_domain(z3_generators(), Vec3::Zero(), opts);

  CHECK_FALSE(dom.cutoff_bounded);
  CHECK(dom.real_face_count == 6);
  CHECK(dom.volume == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dom.convex);
  CHECK(dom.max_dihedral <= kPi / 2.0 + 1e-9);

  // Exactly three opposite face pairs, involution exact.
  int pair_count = 0;
  for (const auto& p : dom.pairings) {
    REQUIRE(p.partner_face >= 0);
    const auto* back = dom.pairing_of_face(p.partner_face);
    REQUIRE(back != nullptr);
    CHECK(back->partner_face == p.face);
    CHECK(p.vertex_match_error < 1e-9);
    if (p.face < p.partner_face) ++pair_count;
  }
  CHECK(pair_count == 3);

  // Cube geometry: all vertices at (+-1/2, +-1/2, +-1/2).
  for (const auto& v : dom.poly.vertices())
    CHECK(v.cwiseAbs().isApprox(Vec3(0.5, 0.5, 0.5), 1e-9));
}

TEST_CASE("dirichlet domain: shifted basepoint still tiles") {
  DirichletOptions opts;
  opts.cutoff = 2.0;
  opts.max_word_length = 4;
  const auto dom =
      dirichlet_domain(z3_generators(), Vec3(0.13, -0.21, 0.05), opts);
  CHECK(dom.volume == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(dom.real_face_count == 6);
}

TEST_CASE("dirichlet domain: screw motion gives a slab") {
  const double L = 0.8, beta = 1.1;
  DirichletOptions opts;
  opts.cutoff = 2.5;
  opts.max_word_length = 5;
  const auto dom = dirichlet_domain(
      {Isometry::screw(Vec3::UnitZ(), L, beta)}, Vec3::Zero(), opts);

  CHECK(dom.cutoff_bounded);  // unbounded transverse to the axis
  CHECK(dom.real_face_count == 2);

  // The two real faces are orthogonal to the axis at +-L/2.
  double width_lo = 0.0, width_hi = 0.0;
  for (const auto& f : dom.poly.faces()) {
    if (f.plane.source < 0) continue;
    CHECK(std::abs(f.plane.normal[2]) == doctest::Approx(1.0).epsilon(1e-12));
    if (f.plane.normal[2] > 0)
      width_hi = f.plane.offset;
    else
      width_lo = -f.plane.offset;
  }
  CHECK(width_hi - width_lo == doctest::Approx(L).epsilon(1e-10));

  // Faces pair with each other through the screw word and its inverse.
  for (const auto& p : dom.pairings) {
    CHECK(p.partner_face >= 0);
    CHECK(p.vertex_match_error < 1e-8);
  }
}

TEST_CASE("dirichlet domain: empty generator list") {
  DirichletOptions opts;
  opts.cutoff = 1.5;
  const auto dom = dirichlet_domain({}, Vec3::Zero(), opts);
  CHECK(dom.cutoff_bounded);
  CHECK(dom.real_face_count == 0);
  CHECK(dom.pairings.empty());
}

TEST_CASE("dirichlet domain error paths") {
  SUBCASE("fixed basepoint") {
    CHECK_THROWS_AS(dirichlet_domain({Isometry::rotation(Vec3::UnitZ(), 1.0)},
                                     Vec3::Zero(), {}),
                    std::invalid_argument);
  }
  SUBCASE("non-discreteness heuristic") {
    // Irrational-angle rotation about a far axis accumulates images.
    const Isometry far_rot =
        Isometry::translation(Vec3(1, 0, 0))
            .compose(Isometry::rotation(Vec3::UnitZ(), 1e-7))
            .compose(Isometry::translation(Vec3(-1, 0, 0)));
    CHECK_THROWS_AS(dirichlet_domain({far_rot}, Vec3::Zero(), {}),
                    std::runtime_error);
  }
}

TEST_CASE("dirichlet domain: hyperbolic cyclic boost") {
  const double rap = 1.6;
  DirichletOptions opts;
  opts.cutoff = 2.0;
  opts.max_word_length = 4;
  opts.qmc_log2_points = 14;
  const auto dom = dirichlet_domain({Isometry::boost(Vec3::UnitZ(), rap)},
                                    Vec3::Zero(), opts);

  CHECK(dom.kind == Isometry::Kind::Lorentz);
  CHECK(dom.cutoff_bounded);
  CHECK(dom.real_face_count == 2);
  for (const auto& f : dom.poly.faces()) {
    if (f.plane.source < 0) continue;
    // Klein height of the half-rapidity plane.
    CHECK(std::abs(f.plane.offset) ==
          doctest::Approx(std::tanh(rap / 2.0)).epsilon(1e-10));
  }
  for (const auto& p : dom.pairings) {
    CHECK(p.partner_face >= 0);
    CHECK(p.vertex_match_error < 1e-8);
  }
}

TEST_CASE("dirichlet domain: hyperbolic schottky pair is bounded-free") {
  DirichletOptions opts;
  opts.cutoff = 2.0;
  opts.max_word_length = 3;
  opts.qmc_log2_points = 14;
  const auto dom = dirichlet_domain({Isometry::boost(Vec3::UnitX(), 3.0),
                                     Isometry::boost(Vec3::UnitY(), 3.0)},
                                    Vec3::Zero(), opts);
  CHECK(dom.real_face_count >= 4);
  int paired = 0;
  for (const auto& p : dom.pairings)
    if (p.partner_face >= 0) {
      ++paired;
      CHECK(p.vertex_match_error < 1e-7);
    }
  CHECK(paired >= 4);
  CHECK(dom.volume > 0.0);
}

TEST_CASE("singular dirichlet") {
  const double L = 1.2, alpha = kPi / 3.0;

  SUBCASE("solid torus with singular core: slab cap wedge") {
    DirichletOptions opts;
    opts.cutoff = 2.5;
    const SectorLift lift{ConeAngle(alpha), Isometry::Kind::Euclidean};
    const auto dom = singular_dirichlet(
        lift, {Isometry::translation(Vec3(0, 0, L))}, 0.0, opts);

    CHECK(dom.wedge_angle == doctest::Approx(alpha).epsilon(1e-14));
    CHECK(dom.real_face_count == 2);  // slab faces
    CHECK(dom.convex);

    // Domain lies between two axis-orthogonal planes at distance <= L.
    double hi = 0, lo = 0;
    for (const auto& f : dom.poly.faces()) {
      if (f.plane.source < 0) continue;
      if (f.plane.normal[2] > 0) hi = f.plane.offset;
      else lo = -f.plane.offset;
    }
    CHECK(hi - lo == doctest::Approx(L).epsilon(1e-10));

    // Wedge faces pair through the alpha rotation.
    int wedge_pairs = 0;
    for (const auto& p : dom.pairings)
      if (p.word == -2) {
        ++wedge_pairs;
        CHECK(p.vertex_match_error < 1e-8);
      }
    CHECK(wedge_pairs == 2);

    // Volume: sector fraction of the slab cylinder within the cutoff box.
    CHECK(dom.volume > 0.0);
  }

  SUBCASE("screw deck map with matching rotation") {
    DirichletOptions opts;
    opts.cutoff = 2.0;
    const SectorLift lift{ConeAngle(kPi / 2.0), Isometry::Kind::Euclidean};
    const auto dom = singular_dirichlet(
        lift, {Isometry::screw(Vec3::UnitZ(), 0.9, 0.4)}, 0.3, opts);
    CHECK(dom.real_face_count == 2);
    for (const auto& p : dom.pairings)
      if (p.word >= 0) CHECK(p.vertex_match_error < 1e-8);
  }

  SUBCASE("alpha = 2pi degenerates to the plain domain") {
    const SectorLift lift{ConeAngle(2.0 * kPi), Isometry::Kind::Euclidean};
    DirichletOptions opts;
    opts.cutoff = 2.0;
    const auto dom = singular_dirichlet(
        lift, {Isometry::translation(Vec3(0, 0, L))}, 0.0, opts);
    CHECK(dom.wedge_angle == 0.0);
    CHECK(dom.real_face_count == 2);
  }

  SUBCASE("large L recedes past the cutoff") {
    DirichletOptions opts;
    opts.cutoff = 1.0;
    const SectorLift lift{ConeAngle(alpha), Isometry::Kind::Euclidean};
    const auto dom = singular_dirichlet(
        lift, {Isometry::translation(Vec3(0, 0, 50.0))}, 0.0, opts);
    CHECK(dom.real_face_count == 0);
    CHECK(dom.cutoff_bounded);
  }

  SUBCASE("rejections") {
    const SectorLift bad{ConeAngle(4.0), Isometry::Kind::Euclidean};
    CHECK_THROWS(singular_dirichlet(bad, {}, 0.0, {}));
    const SectorLift lift{ConeAngle(alpha), Isometry::Kind::Euclidean};
    CHECK_THROWS(singular_dirichlet(
        lift, {Isometry::translation(Vec3(1, 0, 0))}, 0.0, {}));
  }

  SUBCASE("hyperbolic sector with boost deck") {
    DirichletOptions opts;
    opts.cutoff = 2.0;
    opts.qmc_log2_points = 12;
    const SectorLift lift{ConeAngle(kPi / 2.0), Isometry::Kind::Lorentz};
    const auto dom = singular_dirichlet(
        lift, {Isometry::boost(Vec3::UnitZ(), 1.0)}, 0.0, opts);
    CHECK(dom.real_face_count == 2);
    CHECK(dom.wedge_angle == doctest::Approx(kPi / 2.0));
  }
}

TEST_CASE("bishop-gromov profile") {
  // Unit cube centred at the origin.
  DirichletOptions opts;
  opts.cutoff = 2.0;
  opts.max_word_length = 3;
  const auto cube = dirichlet_domain(z3_generators(), Vec3::Zero(), opts);

  SUBCASE("balls inside the cube have ratio 1") {
    const auto prof = bishop_gromov_profile(cube.poly, Curvature(0.0),
                                            Vec3::Zero(), {0.1, 0.2, 0.3, 0.4},
                                            0, 16, 8);
    for (const auto& p : prof) {
      CHECK(p.ratio == doctest::Approx(1.0).epsilon(0.02));
      CHECK(std::abs(p.ratio - 1.0) <= 5.0 * p.se + 1e-3);
    }
  }

  SUBCASE("ratio drops once the ball leaves the cube") {
    const auto prof = bishop_gromov_profile(cube.poly, Curvature(0.0),
                                            Vec3::Zero(), {0.5, 1.0}, 0, 16, 8);
    CHECK(prof[1].ratio < prof[0].ratio);
    // Exact values: ratio(0.5) = 1, ratio(1.0) = 1 / V_0(1).
    CHECK(prof[0].ratio == doctest::Approx(1.0).epsilon(0.02));
    CHECK(prof[1].ratio ==
          doctest::Approx(1.0 / (4.0 / 3.0 * kPi)).epsilon(0.05));
  }

  SUBCASE("profile non-increasing within 3 standard errors") {
    const auto prof = bishop_gromov_profile(
        cube.poly, Curvature(0.0), Vec3(0.1, -0.05, 0.2),
        {0.2, 0.4, 0.6, 0.8, 1.0, 1.3}, 7, 16, 8);
    for (std::size_t i = 1; i < prof.size(); ++i)
      CHECK(prof[i].ratio <=
            prof[i - 1].ratio + 3.0 * (prof[i].se + prof[i - 1].se) + 1e-9);
  }

  SUBCASE("center outside is rejected") {
    CHECK_THROWS(bishop_gromov_profile(cube.poly, Curvature(0.0),
                                       Vec3(2, 0, 0), {0.5}, 0, 10, 4));
  }

  SUBCASE("hyperbolic slab profile non-increasing") {
    DirichletOptions hopts;
    hopts.cutoff = 1.5;
    hopts.qmc_log2_points = 12;
    const auto slab = dirichlet_domain({Isometry::boost(Vec3::UnitZ(), 1.2)},
                                       Vec3::Zero(), hopts);
    const auto prof = bishop_gromov_profile(slab.poly, Curvature(-1.0),
                                            Vec3::Zero(), {0.2, 0.5, 0.9, 1.3},
                                            0, 16, 8);
    for (std::size_t i = 1; i < prof.size(); ++i)
      CHECK(prof[i].ratio <=
            prof[i - 1].ratio + 3.0 * (prof[i].se + prof[i - 1].se) + 1e-9);
  }
}

TEST_CASE("packing count bound") {
  const long long b1 = packing_count_bound(1.0, 1.0);
  CHECK(b1 >= 1);
  const long long b2 = packing_count_bound(1.0, 0.25);
  CHECK(b2 > b1);

  // Monotone increasing in R, decreasing in eps.
  long long prev = 0;
  for (double R : {0.5, 1.0, 1.5, 2.0}) {
    const long long b = packing_count_bound(R, 0.25);
    CHECK(b >= prev);
    prev = b;
  }
  prev = std::numeric_limits<long long>::max();
  for (double eps : {0.1, 0.2, 0.4, 0.8}) {
    const long long b = packing_count_bound(1.0, eps);
    CHECK(b <= prev);
    prev = b;
  }

  // A greedy Euclidean packing never exceeds the bound.
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  const double R = 1.0, eps = 0.3;
  std::vector<Vec3> centers;
  for (int i = 0; i < 20000; ++i) {
    const Vec3 c(d(rng), d(rng), d(rng));
    if (c.norm() > R - eps) continue;
    bool ok = true;
    for (const auto& o : centers)
      if ((c - o).norm() < 2.0 * eps) ok = false;
    if (ok) centers.push_back(c);
  }
  CHECK((long long)centers.size() <= packing_count_bound(R, eps));

  CHECK_THROWS(packing_count_bound(1.0, 2.0));
}
