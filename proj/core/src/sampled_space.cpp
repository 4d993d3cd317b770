#include "conewerk/sampled_space.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace conewerk {

SampledSpace::SampledSpace(std::vector<std::vector<double>> dist,
                           std::vector<double> radius_fn, VolumeOracle oracle)
    : dist_(std::move(dist)), radius_(std::move(radius_fn)),
      volume_(std::move(oracle)) {
  const std::size_t n = dist_.size();
  if (n == 0) throw std::invalid_argument("empty space");
  if (radius_.size() != n)
    throw std::invalid_argument("radius function size mismatch");
  if (!volume_) throw std::invalid_argument("volume oracle required");
  for (std::size_t i = 0; i < n; ++i) {
    if (dist_[i].size() != n) throw std::invalid_argument("matrix not square");
    if (std::abs(dist_[i][i]) > 1e-9)
      throw std::invalid_argument("nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(dist_[i][j] - dist_[j][i]) > 1e-9)
        throw std::invalid_argument("matrix not symmetric");
  }
  for (double r : radius_)
    if (!(r > 0.0 && r <= 1.0))
      throw std::invalid_argument("radius function must take values in (0,1]");
  // Spot-check the triangle inequality (full cubic check only when small).
  if (n <= 64) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (dist_[i][k] > dist_[i][j] + dist_[j][k] + 1e-9)
            throw std::invalid_argument("triangle inequality violated");
  }
}

void SampledSpace::mark_singular_component(
    int label, const std::vector<std::size_t>& pts) {
  if (pts.empty()) throw std::invalid_argument("empty singular component");
  for (std::size_t p : pts)
    if (p >= size()) throw std::invalid_argument("singular index out of range");
  singular_.push_back({label, pts});
}

double SampledSpace::distance_to_component(std::size_t i, int label) const {
  for (const auto& [lab, pts] : singular_) {
    if (lab != label) continue;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t p : pts) best = std::min(best, d(i, p));
    return best;
  }
  throw std::invalid_argument("unknown singular component");
}

SampledSpace flat_torus_grid(int m, double radius) {
  if (m < 2) throw std::invalid_argument("grid needs m >= 2");
  const std::size_t n = std::size_t(m) * m * m;
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  auto coord = [m](std::size_t idx) {
    const int x = int(idx % m);
    const int y = int((idx / m) % m);
    const int z = int(idx / (std::size_t(m) * m));
    return std::array<double, 3>{double(x) / m, double(y) / m, double(z) / m};
  };
  auto wrap = [](double t) {
    t = std::abs(t);
    return std::min(t, 1.0 - t);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = coord(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto b = coord(j);
      const double dx = wrap(a[0] - b[0]);
      const double dy = wrap(a[1] - b[1]);
      const double dz = wrap(a[2] - b[2]);
      dist[i][j] = dist[j][i] = std::sqrt(dx * dx + dy * dy + dz * dz);
    }
  }
  auto oracle = [](std::size_t, double r) {
    // Exact for r <= 1/2 where the ball embeds.
    return 4.0 / 3.0 * std::numbers::pi * r * r * r;
  };
  return SampledSpace(std::move(dist), std::vector<double>(n, radius), oracle);
}

}  // namespace conewerk
