#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace conewerk {

// Finite sample of a metric space with the hooks the covering pipeline
// needs: a volume oracle for balls, a radius function with values in
// (0,1], optional singular components, and an optional anchor subset.
class SampledSpace {
 public:
  using VolumeOracle = std::function<double(std::size_t center, double radius)>;

  SampledSpace(std::vector<std::vector<double>> dist,
               std::vector<double> radius_fn, VolumeOracle volume_oracle);

  std::size_t size() const { return dist_.size(); }
  double d(std::size_t i, std::size_t j) const { return dist_[i][j]; }
  double radius(std::size_t i) const { return radius_[i]; }
  double ball_volume(std::size_t center, double r) const {
    return volume_(center, r);
  }

  // Singular marks: component label per marked point.
  void mark_singular_component(int label, const std::vector<std::size_t>& pts);
  const std::vector<std::pair<int, std::vector<std::size_t>>>&
  singular_components() const {
    return singular_;
  }
  // Distance from a point to a marked component.
  double distance_to_component(std::size_t i, int label) const;

  void set_anchor(std::vector<std::size_t> pts) { anchor_ = std::move(pts); }
  const std::vector<std::size_t>& anchor() const { return anchor_; }

 private:
  std::vector<std::vector<double>> dist_;
  std::vector<double> radius_;
  VolumeOracle volume_;
  std::vector<std::pair<int, std::vector<std::size_t>>> singular_;
  std::vector<std::size_t> anchor_;
};

// m x m x m grid on the unit flat 3-torus with the toroidal metric, the
// exact Lebesgue ball-volume oracle (valid for r <= 1/2) and constant
// radius function.
SampledSpace flat_torus_grid(int m, double radius = 0.3);

}  // namespace conewerk
