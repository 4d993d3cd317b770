#include "conewerk/covering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace conewerk {

std::vector<std::size_t> greedy_maximal_packing(
    const SampledSpace& space, const std::vector<std::size_t>& seed_order,
    const std::vector<std::size_t>& mandatory_first) {
  const std::size_t n = space.size();
  std::vector<std::size_t> order = seed_order;
  if (order.empty()) {
    order.resize(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
  }
  if (order.size() != n)
    throw std::invalid_argument("seed order must be a permutation");
  std::vector<bool> seen(n, false);
  for (std::size_t i : order) {
    if (i >= n || seen[i])
      throw std::invalid_argument("seed order must be a permutation");
    seen[i] = true;
  }

  auto packs_with = [&](std::size_t x, const std::vector<std::size_t>& in) {
    for (std::size_t c : in)
      if (space.d(x, c) < (space.radius(x) + space.radius(c)) / 4.0)
        return false;
    return true;
  };

  std::vector<std::size_t> centers;
  for (std::size_t m : mandatory_first) {
    if (m >= n) throw std::invalid_argument("mandatory point out of range");
    if (!packs_with(m, centers))
      throw std::invalid_argument(
          "mandatory points violate the quarter-ball packing property");
    centers.push_back(m);
  }
  for (std::size_t x : order)
    if (packs_with(x, centers)) centers.push_back(x);
  return centers;
}

Covering build_covering(const SampledSpace& space,
                        const std::vector<std::size_t>& centers,
                        CoveringMode mode, double mu) {
  const std::size_t n = space.size();
  const std::size_t p = centers.size();
  if (p == 0) throw std::invalid_argument("covering needs at least one ball");

  Covering cov;
  cov.centers = centers;
  cov.mode = mode;
  cov.mu = mu;
  cov.radii.reserve(p);
  for (std::size_t c : centers) cov.radii.push_back(space.radius(c));

  // Excluded subsets per construction mode.
  std::vector<std::vector<bool>> excluded_from(p, std::vector<bool>(n, false));

  if (mode == CoveringMode::ExcludeSingularTubes) {
    if (space.singular_components().empty())
      throw std::invalid_argument("no singular components marked");
    for (const auto& [label, pts] : space.singular_components()) {
      // Designated center: a center that lies on this component.
      std::size_t designated = SIZE_MAX;
      for (std::size_t ci = 0; ci < p; ++ci)
        if (std::find(pts.begin(), pts.end(), centers[ci]) != pts.end()) {
          designated = ci;
          break;
        }
      if (designated == SIZE_MAX)
        throw std::invalid_argument(
            "singular component has no designated center among the balls");
      if (mu > space.radius(centers[designated]) / 18.0 + 1e-12)
        throw std::invalid_argument(
            "mu exceeds r/18 of a designated singular ball");
      cov.designated.push_back({label, designated});
      // Tube of the component: points within mu of the marked set.
      for (std::size_t q = 0; q < n; ++q) {
        if (space.distance_to_component(q, label) >= mu) continue;
        for (std::size_t ci = 0; ci < p; ++ci)
          if (ci != designated) excluded_from[ci][q] = true;
        // The designated ball must hold its tube well inside.
        if (space.d(q, centers[designated]) >
            space.radius(centers[designated]) / 4.0)
          throw std::invalid_argument(
              "tube point escapes the quarter ball of its designated center");
      }
    }
  } else if (mode == CoveringMode::ExcludeAnchor) {
    if (space.anchor().empty())
      throw std::invalid_argument("no anchor subset set on the space");
    const std::size_t designated = 0;  // anchor ball is seated first
    for (std::size_t q : space.anchor()) {
      if (space.d(q, centers[designated]) >
          space.radius(centers[designated]) / 9.0)
        throw std::invalid_argument(
            "anchor not inside B(x_0, r_0/9) of its designated ball");
      for (std::size_t ci = 1; ci < p; ++ci) excluded_from[ci][q] = true;
    }
    cov.designated.push_back({-1, designated});
  }

  cov.membership.assign(p, std::vector<bool>(n, false));
  cov.boundary_dist.assign(
      p, std::vector<double>(n, -std::numeric_limits<double>::infinity()));

  for (std::size_t ci = 0; ci < p; ++ci) {
    const std::size_t c = centers[ci];
    const double r = cov.radii[ci];
    // Excluded sample points inside the ball approximate the inner boundary.
    std::vector<std::size_t> inner_boundary;
    for (std::size_t q = 0; q < n; ++q)
      if (excluded_from[ci][q] && space.d(q, c) < r) inner_boundary.push_back(q);
    for (std::size_t q = 0; q < n; ++q) {
      if (excluded_from[ci][q]) continue;
      const double dq = space.d(q, c);
      if (dq >= r) continue;
      cov.membership[ci][q] = true;
      double bd = r - dq;
      for (std::size_t e : inner_boundary) bd = std::min(bd, space.d(q, e));
      cov.boundary_dist[ci][q] = bd;
    }
  }
  return cov;
}

CoveringReport verify_covering(const SampledSpace& space, const Covering& c) {
  CoveringReport rep;
  const std::size_t p = c.set_count();
  const std::size_t n = space.size();

  // 1) Containment is structural here; radii must not exceed 1.
  rep.contained_radius_ok = true;
  for (double r : c.radii)
    if (!(r > 0.0 && r <= 1.0 + 1e-12)) {
      rep.contained_radius_ok = false;
      rep.failures.push_back("property 1: a radius exceeds 1");
    }

  // 2) Radius ratios over intersecting balls.
  rep.ratio_ok = true;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) {
      const double d = space.d(c.centers[i], c.centers[j]);
      if (d >= c.radii[i] + c.radii[j]) continue;
      const double ratio = c.radii[i] / c.radii[j];
      if (ratio < 0.75 - 1e-12 || ratio > 4.0 / 3.0 + 1e-12) {
        rep.ratio_ok = false;
        rep.failures.push_back("property 2: ratio " + std::to_string(ratio) +
                               " on balls " + std::to_string(i) + "," +
                               std::to_string(j));
      }
    }

  // 3) Quarter balls pairwise disjoint.
  rep.quarter_disjoint_ok = true;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) {
      const double d = space.d(c.centers[i], c.centers[j]);
      if (d < (c.radii[i] + c.radii[j]) / 4.0 - 1e-12) {
        rep.quarter_disjoint_ok = false;
        rep.failures.push_back("property 3: quarter balls " +
                               std::to_string(i) + "," + std::to_string(j) +
                               " overlap");
      }
    }

  // 4) Every sample point sits deep inside some open set.
  rep.deep_point_ok = true;
  for (std::size_t q = 0; q < n; ++q) {
    bool deep = false;
    for (std::size_t i = 0; i < p && !deep; ++i)
      if (c.membership[i][q] &&
          c.boundary_dist[i][q] >= c.radii[i] / 3.0 - 1e-12)
        deep = true;
    if (!deep) {
      rep.deep_point_ok = false;
      rep.failures.push_back("property 4: sample point " + std::to_string(q) +
                             " is nowhere deep");
    }
  }

  // 5) Minimal feasible eta from the oracle volumes (V_i inside the ball).
  rep.min_eta = 0.0;
  for (std::size_t i = 0; i < p; ++i) {
    const double vol = space.ball_volume(c.centers[i], c.radii[i]);
    rep.min_eta =
        std::max(rep.min_eta, vol / (c.radii[i] * c.radii[i] * c.radii[i]));
  }

  // 7) Tubes/anchor confined to their designated set.
  rep.tubes_unique_ok = true;
  if (c.mode == CoveringMode::ExcludeSingularTubes) {
    for (const auto& [label, des] : c.designated) {
      for (std::size_t q = 0; q < n; ++q) {
        if (space.distance_to_component(q, label) >= c.mu) continue;
        for (std::size_t i = 0; i < p; ++i) {
          const bool want = i == des;
          if (c.membership[i][q] != want) {
            rep.tubes_unique_ok = false;
            rep.failures.push_back("property 7: tube point " +
                                   std::to_string(q) + " vs set " +
                                   std::to_string(i));
          }
        }
      }
    }
  } else if (c.mode == CoveringMode::ExcludeAnchor) {
    for (std::size_t q : space.anchor())
      for (std::size_t i = 0; i < p; ++i) {
        const bool want = i == 0;
        if (c.membership[i][q] != want) {
          rep.tubes_unique_ok = false;
          rep.failures.push_back("property 7: anchor point " +
                                 std::to_string(q) + " vs set " +
                                 std::to_string(i));
        }
      }
  }

  return rep;
}

}  // namespace conewerk
