#include "conewerk/metric_samples.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace conewerk {

namespace {
constexpr double kMetricTol = 1e-9;
}

PointedSample::PointedSample(std::vector<std::vector<double>> dist,
                             std::size_t basepoint,
                             std::vector<bool> singular_marks)
    : dist_(std::move(dist)), basepoint_(basepoint),
      marks_(std::move(singular_marks)) {
  const std::size_t n = dist_.size();
  if (n == 0) throw std::invalid_argument("empty sample");
  if (basepoint_ >= n) throw std::invalid_argument("basepoint out of range");
  if (!marks_.empty() && marks_.size() != n)
    throw std::invalid_argument("marks size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (dist_[i].size() != n) throw std::invalid_argument("matrix not square");
    if (std::abs(dist_[i][i]) > kMetricTol)
      throw std::invalid_argument("nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      if (dist_[i][j] < 0.0) throw std::invalid_argument("negative distance");
      if (std::abs(dist_[i][j] - dist_[j][i]) > kMetricTol)
        throw std::invalid_argument("matrix not symmetric");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (dist_[i][k] > dist_[i][j] + dist_[j][k] + kMetricTol)
          throw std::invalid_argument("triangle inequality violated");
}

bool eps_approximation_check(const std::vector<std::vector<double>>& d_union,
                             const PointedSample& X, const PointedSample& Y,
                             double eps) {
  const std::size_t n = X.size(), m = Y.size();
  if (d_union.size() != n + m)
    throw std::invalid_argument("union matrix has wrong size");
  for (const auto& row : d_union)
    if (row.size() != n + m)
      throw std::invalid_argument("union matrix not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(d_union[i][j] - X.d(i, j)) > kMetricTol)
        throw std::invalid_argument("union metric does not restrict to X");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (std::abs(d_union[n + i][n + j] - Y.d(i, j)) > kMetricTol)
        throw std::invalid_argument("union metric does not restrict to Y");

  for (std::size_t i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < m; ++j) best = std::min(best, d_union[i][n + j]);
    if (best > eps) return false;
  }
  for (std::size_t j = 0; j < m; ++j) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) best = std::min(best, d_union[i][n + j]);
    if (best > eps) return false;
  }
  return d_union[X.basepoint()][n + Y.basepoint()] <= eps;
}

namespace {

// Branch-and-bound minimization of the correspondence distortion.  A
// minimal correspondence is the union of a map A->B with a map B->A, so
// the search assigns those two maps with incremental pruning.
class GhSearch {
 public:
  GhSearch(const PointedSample& A, const PointedSample& B) : A_(A), B_(B) {
    p_ = A.size();
    q_ = B.size();
    fa_.assign(p_, SIZE_MAX);
    gb_.assign(q_, SIZE_MAX);
    best_ = std::numeric_limits<double>::infinity();
  }

  GhResult run() {
    fa_[A_.basepoint()] = B_.basepoint();
    assign_f(0, 0.0);
    GhResult out;
    out.bound = 0.5 * best_;
    for (std::size_t i = 0; i < p_; ++i) out.correspondence.push_back({i, best_fa_[i]});
    for (std::size_t j = 0; j < q_; ++j) {
      bool dup = false;
      for (std::size_t i = 0; i < p_; ++i)
        if (best_fa_[i] == j && best_gb_[j] == i) dup = true;
      if (!dup) out.correspondence.push_back({best_gb_[j], j});
    }
    std::sort(out.correspondence.begin(), out.correspondence.end());
    out.correspondence.erase(
        std::unique(out.correspondence.begin(), out.correspondence.end()),
        out.correspondence.end());
    return out;
  }

 private:
  double f_increment(std::size_t i, std::size_t b) const {
    double m = 0.0;
    for (std::size_t j = 0; j < p_; ++j)
      if (fa_[j] != SIZE_MAX && j != i)
        m = std::max(m, std::abs(A_.d(i, j) - B_.d(b, fa_[j])));
    return m;
  }

  double g_increment(std::size_t j, std::size_t a) const {
    double m = 0.0;
    for (std::size_t i = 0; i < p_; ++i)
      m = std::max(m, std::abs(A_.d(a, i) - B_.d(j, fa_[i])));
    for (std::size_t j2 = 0; j2 < q_; ++j2)
      if (gb_[j2] != SIZE_MAX && j2 != j)
        m = std::max(m, std::abs(A_.d(a, gb_[j2]) - B_.d(j, j2)));
    return m;
  }

  void assign_f(std::size_t i, double cur) {
    if (cur >= best_) return;
    while (i < p_ && fa_[i] != SIZE_MAX) ++i;
    if (i == p_) {
      assign_g(0, cur);
      return;
    }
    std::vector<std::pair<double, std::size_t>> cands;
    cands.reserve(q_);
    for (std::size_t b = 0; b < q_; ++b)
      cands.push_back({f_increment(i, b), b});
    std::sort(cands.begin(), cands.end());
    for (const auto& [inc, b] : cands) {
      const double next = std::max(cur, inc);
      if (next >= best_) break;  // sorted, the rest are no better
      fa_[i] = b;
      assign_f(i + 1, next);
      fa_[i] = SIZE_MAX;
    }
  }

  void assign_g(std::size_t j, double cur) {
    if (cur >= best_) return;
    while (j < q_ && gb_[j] != SIZE_MAX) ++j;
    if (j == q_) {
      best_ = cur;
      best_fa_ = fa_;
      best_gb_ = gb_;
      return;
    }
    std::vector<std::pair<double, std::size_t>> cands;
    cands.reserve(p_);
    for (std::size_t a = 0; a < p_; ++a)
      cands.push_back({g_increment(j, a), a});
    std::sort(cands.begin(), cands.end());
    for (const auto& [inc, a] : cands) {
      const double next = std::max(cur, inc);
      if (next >= best_) break;
      gb_[j] = a;
      assign_g(j + 1, next);
      gb_[j] = SIZE_MAX;
    }
  }

  const PointedSample& A_;
  const PointedSample& B_;
  std::size_t p_ = 0, q_ = 0;
  std::vector<std::size_t> fa_, gb_, best_fa_, best_gb_;
  double best_;
};

}  // namespace

GhResult gh_distance_upper(const PointedSample& A, const PointedSample& B) {
  if (A.size() > 12 || B.size() > 12)
    throw std::invalid_argument("gh_distance_upper is capped at 12 points");
  return GhSearch(A, B).run();
}

double bilipschitz_distortion(
    const PointedSample& A, const PointedSample& B,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  for (std::size_t u = 0; u < pairs.size(); ++u)
    for (std::size_t v = u + 1; v < pairs.size(); ++v)
      if (pairs[u].first == pairs[v].first &&
          pairs[u].second != pairs[v].second)
        throw std::invalid_argument("pairs do not define a function");

  double L = 1.0;
  for (std::size_t u = 0; u < pairs.size(); ++u) {
    for (std::size_t v = u + 1; v < pairs.size(); ++v) {
      const double da = A.d(pairs[u].first, pairs[v].first);
      const double db = B.d(pairs[u].second, pairs[v].second);
      if (da == 0.0 && db == 0.0) continue;
      if (da == 0.0 || db == 0.0)
        return std::numeric_limits<double>::infinity();
      L = std::max(L, std::max(da / db, db / da));
    }
  }
  return L;
}

ConvergenceReport geometric_convergence_check(
    const std::vector<PointedSample>& seq, const PointedSample& limit,
    double R, double eps,
    const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>&
        maps) {
  if (maps.size() != seq.size())
    throw std::invalid_argument("one pairing per sequence term required");

  ConvergenceReport report;
  std::vector<std::size_t> ball;
  for (std::size_t p = 0; p < limit.size(); ++p)
    if (limit.d(limit.basepoint(), p) <= R) ball.push_back(p);
  report.limit_ball_size = ball.size();

  for (std::size_t n = 0; n < seq.size(); ++n) {
    const PointedSample& X = seq[n];
    std::vector<std::size_t> f(limit.size(), SIZE_MAX);
    for (const auto& [src, dst] : maps[n]) {
      if (src >= limit.size() || dst >= X.size())
        throw std::invalid_argument("pairing index out of range");
      if (f[src] != SIZE_MAX && f[src] != dst)
        throw std::invalid_argument("pairing is not a function");
      f[src] = dst;
    }
    for (std::size_t p : ball)
      if (f[p] == SIZE_MAX)
        throw std::invalid_argument("map undefined on the required ball");

    ConvergenceItemReport item;
    item.basepoint_close = X.d(f[limit.basepoint()], X.basepoint()) < eps;

    std::vector<bool> in_image(X.size(), false);
    for (std::size_t p : ball) in_image[f[p]] = true;
    item.ball_surjective = true;
    for (std::size_t q = 0; q < X.size(); ++q)
      if (X.d(X.basepoint(), q) <= R - eps && !in_image[q])
        item.ball_surjective = false;

    item.marks_match = true;
    for (std::size_t q = 0; q < X.size(); ++q) {
      if (!in_image[q]) continue;
      bool from_marked = false;
      for (std::size_t p : ball)
        if (f[p] == q && limit.marked(p)) from_marked = true;
      if (from_marked != X.marked(q)) item.marks_match = false;
    }

    std::vector<std::pair<std::size_t, std::size_t>> restr;
    for (std::size_t p : ball) restr.push_back({p, f[p]});
    item.distortion = bilipschitz_distortion(limit, X, restr);
    item.distortion_ok = item.distortion <= 1.0 + eps;

    report.items.push_back(item);
  }
  return report;
}

}  // namespace conewerk
