#pragma once

#include <vector>

#include "conewerk/isometry.hpp"

namespace conewerk {

// Affine half-space {u : normal . u <= offset} in the working chart
// (Euclidean coordinates, or the Klein ball for the hyperbolic model,
// where totally geodesic planes are affine).  source indexes the group
// element whose bisector produced it; -1 marks cutoff-box facets and -2
// sector-wedge facets.
struct HalfSpace {
  Vec3 normal = Vec3::UnitX();
  double offset = 0.0;
  int source = -1;

  double signed_distance(const Vec3& u) const {
    return normal.dot(u) - offset;
  }
};

// Bounded intersection of half-spaces maintained as face loops under
// successive clipping.
class ConvexPolyhedron {
 public:
  struct Face {
    HalfSpace plane;
    std::vector<Vec3> loop;  // ordered, outward orientation
  };

  struct Edge {
    int face_a = 0;
    int face_b = 0;
    Vec3 v0 = Vec3::Zero();
    Vec3 v1 = Vec3::Zero();
  };

  static ConvexPolyhedron box(const Vec3& center, double half_width);

  // Intersect with the half-space; returns false when the result is empty.
  bool clip(const HalfSpace& hs);

  bool empty() const { return faces_.empty(); }
  const std::vector<Face>& faces() const { return faces_; }
  std::vector<Vec3> vertices(double tol = 1e-9) const;
  std::vector<Edge> edges(double tol = 1e-9) const;

  bool contains(const Vec3& u, double tol = 1e-12) const;
  // Exact volume in chart coordinates by a fan of tetrahedra from the
  // star center (any point of the closed polytope).
  double volume_from(const Vec3& star_center) const;
  void bounding_box(Vec3& lo, Vec3& hi) const;

 private:
  std::vector<Face> faces_;
};

}  // namespace conewerk
