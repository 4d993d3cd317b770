#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace conewerk {

// Finite pointed metric space: symmetric distance matrix with zero
// diagonal satisfying the triangle inequality within 1e-9, a basepoint
// index, and optional singular marks.
class PointedSample {
 public:
  PointedSample(std::vector<std::vector<double>> dist, std::size_t basepoint,
                std::vector<bool> singular_marks = {});

  std::size_t size() const { return dist_.size(); }
  std::size_t basepoint() const { return basepoint_; }
  double d(std::size_t i, std::size_t j) const { return dist_[i][j]; }
  bool marked(std::size_t i) const {
    return !marks_.empty() && marks_[i];
  }
  bool has_marks() const { return !marks_.empty(); }

 private:
  std::vector<std::vector<double>> dist_;
  std::size_t basepoint_;
  std::vector<bool> marks_;
};

// True iff the given metric on the disjoint union witnesses mutual
// eps-density and basepoint proximity.  d_union is (n+m) x (n+m) with X
// first; its restrictions must match the native metrics within 1e-9.
bool eps_approximation_check(const std::vector<std::vector<double>>& d_union,
                             const PointedSample& X, const PointedSample& Y,
                             double eps);

struct GhResult {
  double bound = 0.0;  // half the minimal correspondence distortion
  // Minimal correspondence as index pairs (a in A, b in B).
  std::vector<std::pair<std::size_t, std::size_t>> correspondence;
};

// Upper bound for the pointed Hausdorff-Gromov distance by exhaustive
// branch-and-bound over correspondences containing the basepoint pair.
// Sizes are capped at 12.
GhResult gh_distance_upper(const PointedSample& A, const PointedSample& B);

// Minimal 1+eps with (1+eps)^-1 d(a,a') <= d(b,b') <= (1+eps) d(a,a')
// over the given graph pairs; 1 on distance-preserving samples.  Repeated
// sources with different targets are rejected.
double bilipschitz_distortion(
    const PointedSample& A, const PointedSample& B,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

struct ConvergenceItemReport {
  bool basepoint_close = false;    // (i)
  bool ball_surjective = false;    // (ii) on samples
  bool marks_match = false;        // (iii)
  bool distortion_ok = false;      // (1+eps)-bilipschitz on the R-ball
  double distortion = 0.0;
  bool passed() const {
    return basepoint_close && ball_surjective && marks_match && distortion_ok;
  }
};

struct ConvergenceReport {
  std::vector<ConvergenceItemReport> items;
  // Sampling caveat: ball containment is only checked against sampled
  // points, no density assumption is made silently.
  std::size_t limit_ball_size = 0;
  bool all_passed() const {
    for (const auto& it : items)
      if (!it.passed()) return false;
    return true;
  }
};

// Geometric convergence checks on finite samples.  maps[n] pairs limit
// indices inside B(basepoint, R) with indices of seq[n]; a limit sample in
// the R-ball without a pair is an error.
ConvergenceReport geometric_convergence_check(
    const std::vector<PointedSample>& seq, const PointedSample& limit,
    double R, double eps,
    const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& maps);

}  // namespace conewerk
