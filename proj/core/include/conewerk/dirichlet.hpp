#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "conewerk/isometry.hpp"
#include "conewerk/model_spaces.hpp"
#include "conewerk/polyhedron.hpp"

namespace conewerk {

struct DirichletOptions {
  double cutoff = 3.0;
  int max_word_length = 6;
  std::uint64_t seed = 0;
  int qmc_log2_points = 18;
  int qmc_blocks = 16;
  int max_elements = 50000;
};

// Bisector half-space {y : d(y,x) <= d(y, g x)} in chart coordinates
// (Euclidean coords, or the Klein ball where it is again affine).
// Throws when g fixes x.
HalfSpace bisector(const Isometry& g, const Vec3& x_chart);

struct FacePairing {
  int face = -1;
  int partner_face = -1;  // -1 when the partner face was cut away
  int word = -1;          // element index (-2 for sector wedge faces)
  int partner_word = -1;
  double vertex_match_error = 0.0;
};

struct DirichletDomain {
  Isometry::Kind kind = Isometry::Kind::Euclidean;
  // Chart coordinates with the basepoint normalized to the origin.
  ConvexPolyhedron poly;
  std::vector<Isometry> elements;  // enumerated non-identity group elements
  std::vector<std::string> element_names;
  std::vector<FacePairing> pairings;
  bool cutoff_bounded = false;  // a truncation facet survives
  double box_half = 0.0;        // chart half-width of the truncation box
  int real_face_count = 0;
  double volume = 0.0;  // metric volume; exact for Euclidean, QMC otherwise
  double volume_se = 0.0;
  double max_dihedral = 0.0;  // over edges between real faces
  double wedge_angle = 0.0;   // singular domains only
  bool convex = true;

  const FacePairing* pairing_of_face(int face) const;
};

// Dirichlet domain of the group generated by `generators` around the
// basepoint: intersection of the bisector half-spaces of all enumerated
// words whose bisector meets B(basepoint, cutoff), truncated by a box
// inscribed in the cutoff ball.  Throws on mixed kinds, a basepoint fixed
// by a non-identity word, or the non-discreteness heuristic (two distinct
// elements with images within 1e-6).
DirichletDomain dirichlet_domain(const std::vector<Isometry>& generators,
                                 const Vec3& basepoint_chart,
                                 const DirichletOptions& opts = {});

// Infinite sector of dihedral angle alpha about the z-axis, faces
// identified by the rotation of angle alpha.
struct SectorLift {
  ConeAngle alpha;
  Isometry::Kind kind = Isometry::Kind::Euclidean;
};

// Lift of the singular Dirichlet domain inside the sector: bisectors of
// the deck words (which must preserve the axis) intersected with the
// wedge.  basepoint_height places the basepoint on the axis.  alpha = 2pi
// degenerates to dirichlet_domain of the deck group.
DirichletDomain singular_dirichlet(const SectorLift& lift,
                                   const std::vector<Isometry>& deck,
                                   double basepoint_height,
                                   const DirichletOptions& opts = {});

struct ProfilePoint {
  double r = 0.0;
  double ratio = 0.0;  // Vol(domain cap B(center,r)) / V_K(r)
  double se = 0.0;     // standard error over QMC blocks
};

// Ball-volume ratio profile by randomized quasi-Monte Carlo; the profile
// of a star-shaped domain is non-increasing up to sampling error.
std::vector<ProfilePoint> bishop_gromov_profile(
    const ConvexPolyhedron& domain, Curvature K, const Vec3& center_chart,
    std::vector<double> radii, std::uint64_t seed = 0, int log2_points = 18,
    int blocks = 16);

// Metric volume of a chart polytope with its QMC standard error.
std::pair<double, double> polytope_metric_volume(const ConvexPolyhedron& poly,
                                                 Curvature K,
                                                 std::uint64_t seed,
                                                 int log2_points, int blocks);

// ceil(a * V_{-1}(R+eps) / eps^3): disjoint eps-balls in B(R) are at most
// this many, via the two-sided cubic comparison constant a.
long long packing_count_bound(double R, double eps);

}  // namespace conewerk
