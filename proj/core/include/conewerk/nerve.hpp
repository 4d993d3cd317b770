#pragma once

#include <string>
#include <vector>

#include "conewerk/covering.hpp"

namespace conewerk {

// Nerve of a covering restricted to the sample: a simplex per support set
// {i : p in V_i} realized by some sample point, closed under faces.
class NerveComplex {
 public:
  NerveComplex(std::size_t vertex_count,
               std::vector<std::vector<int>> maximal_simplices);

  std::size_t vertex_count() const { return vertex_count_; }
  int dimension() const { return dimension_; }
  const std::vector<std::vector<int>>& maximal_simplices() const {
    return maximal_;
  }
  bool has_simplex(std::vector<int> s) const;
  std::vector<std::pair<int, int>> edge_list() const;
  // Face list up to the given dimension (downward closure, deduplicated).
  std::vector<std::vector<int>> face_list(int max_dim) const;
  std::string to_dot() const;

 private:
  std::size_t vertex_count_;
  std::vector<std::vector<int>> maximal_;
  int dimension_;
};

NerveComplex nerve(const Covering& covering);

// C^1 ramp with phi((-inf,0]) = 0, phi([1/3,inf)) = 1 and |phi'| <= 4:
// the derivative rises linearly to 4 on [0,1/12], holds on [1/12,1/4],
// and falls on [1/4,1/3].
double bump(double t);
double bump_derivative(double t);

// Sparse point of the nerve in barycentric coordinates.
struct BarycentricPoint {
  std::vector<int> support;    // sorted set indices with positive weight
  std::vector<double> coords;  // matching weights, sum 1
};

// Normalized bump weights phi(d(x, dV_i)/r_i) over the sets containing x.
// Throws when the weights sum below 1 (a property-4 violation).
BarycentricPoint partition_map(const Covering& covering, std::size_t x);

// Euclidean distance between two sparse barycentric points of R^p.
double barycentric_distance(const BarycentricPoint& a,
                            const BarycentricPoint& b);

struct RetractionResult {
  std::vector<BarycentricPoint> samples;
  bool ok = true;
  std::string failure;
  int pushes = 0;         // simplex collapses performed
  double min_gap = 0.0;   // smallest accepted gap around a retraction center
};

// Radial retraction of the mapped samples onto the target skeleton,
// top-dimensional simplices first.  Retraction centers are searched on a
// barycentric lattice of mesh 1/16; failure to find a point at distance
// >= gap_min from the samples aborts with the densest simplex reported.
RetractionResult retract_to_skeleton(std::vector<BarycentricPoint> samples,
                                     int target_dim, double gap_min = 1e-6);

// Property check: every sample whose (possibly retracted) support contains
// v still lies in the union of the V_j meeting V_v.
bool star_preimage_preserved(const Covering& covering,
                             const std::vector<BarycentricPoint>& mapped,
                             const std::vector<std::size_t>& sample_points);

}  // namespace conewerk
