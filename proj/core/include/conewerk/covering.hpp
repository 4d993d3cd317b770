#pragma once

#include <string>
#include <vector>

#include "conewerk/sampled_space.hpp"

namespace conewerk {

// Greedy maximal family with pairwise-disjoint quarter balls: a point is
// accepted when d(x, x_i) >= (r(x)+r(x_i))/4 against all accepted centers.
// mandatory_first points (e.g. one per singular component, or the anchor)
// are seated first and must satisfy the property among themselves.
std::vector<std::size_t> greedy_maximal_packing(
    const SampledSpace& space, const std::vector<std::size_t>& seed_order,
    const std::vector<std::size_t>& mandatory_first = {});

enum class CoveringMode { Plain, ExcludeSingularTubes, ExcludeAnchor };

// Finite-sample covering: V_i is the sample trace of B(x_i, r_i) minus the
// excluded tubes/anchor (kept whole in the designated set).
struct Covering {
  std::vector<std::size_t> centers;
  std::vector<double> radii;
  CoveringMode mode = CoveringMode::Plain;
  double mu = 0.0;
  // membership[i][p]: sample point p lies in V_i.
  std::vector<std::vector<bool>> membership;
  // boundary_dist[i][p]: sampled d(p, boundary V_i); meaningful only when
  // member.  Radial gap to the sphere, capped by the distance to excluded
  // points inside the ball.
  std::vector<std::vector<double>> boundary_dist;
  // (component label or -1 for the anchor, designated set index)
  std::vector<std::pair<int, std::size_t>> designated;
  double eta = 0.0;  // minimal feasible eta, set by verify_covering

  std::size_t set_count() const { return centers.size(); }
};

Covering build_covering(const SampledSpace& space,
                        const std::vector<std::size_t>& centers,
                        CoveringMode mode = CoveringMode::Plain,
                        double mu = 0.0);

struct CoveringReport {
  bool contained_radius_ok = false;  // 1) V_i inside B(x_i, r_i), r_i <= 1
  bool ratio_ok = false;             // 2) 3/4 <= r_i/r_j <= 4/3 on overlaps
  bool quarter_disjoint_ok = false;  // 3) quarter balls pairwise disjoint
  bool deep_point_ok = false;        // 4) some V_i with d(x,dV_i) >= r_i/3
  double min_eta = 0.0;              // 5) max_i Vol(V_i)/r_i^3
  bool tubes_unique_ok = true;       // 7) tube/anchor in one open set only
  std::vector<std::string> failures;

  bool items_pass() const {
    return contained_radius_ok && ratio_ok && quarter_disjoint_ok &&
           deep_point_ok && tubes_unique_ok;
  }
};

// Checks properties 1)-5) (and 7) for tube/anchor modes) on the sample and
// reports the minimal feasible eta.  Failures are collected, not thrown.
CoveringReport verify_covering(const SampledSpace& space, const Covering& c);

}  // namespace conewerk
