#include "conewerk/nerve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace conewerk {

NerveComplex::NerveComplex(std::size_t vertex_count,
                           std::vector<std::vector<int>> maximal_simplices)
    : vertex_count_(vertex_count), maximal_(std::move(maximal_simplices)) {
  dimension_ = -1;
  for (auto& s : maximal_) {
    std::sort(s.begin(), s.end());
    dimension_ = std::max(dimension_, int(s.size()) - 1);
  }
}

bool NerveComplex::has_simplex(std::vector<int> s) const {
  std::sort(s.begin(), s.end());
  for (const auto& m : maximal_)
    if (std::includes(m.begin(), m.end(), s.begin(), s.end())) return true;
  return false;
}

std::vector<std::pair<int, int>> NerveComplex::edge_list() const {
  std::set<std::pair<int, int>> edges;
  for (const auto& m : maximal_)
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        edges.insert({m[i], m[j]});
  return {edges.begin(), edges.end()};
}

std::vector<std::vector<int>> NerveComplex::face_list(int max_dim) const {
  std::set<std::vector<int>> faces;
  for (const auto& m : maximal_) {
    const int k = int(m.size());
    // Enumerate subsets up to size max_dim+1 (k is small: <= N+1).
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      if (max_dim >= 0 && __builtin_popcountll(mask) > max_dim + 1) continue;
      std::vector<int> f;
      for (int b = 0; b < k; ++b)
        if (mask & (std::uint64_t{1} << b)) f.push_back(m[b]);
      faces.insert(std::move(f));
    }
  }
  return {faces.begin(), faces.end()};
}

std::string NerveComplex::to_dot() const {
  std::string out = "graph nerve {\n";
  for (std::size_t v = 0; v < vertex_count_; ++v)
    out += "  v" + std::to_string(v) + ";\n";
  for (const auto& [a, b] : edge_list())
    out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

NerveComplex nerve(const Covering& covering) {
  const std::size_t p = covering.set_count();
  const std::size_t n = p == 0 ? 0 : covering.membership[0].size();
  std::set<std::vector<int>> supports;
  for (std::size_t q = 0; q < n; ++q) {
    std::vector<int> s;
    for (std::size_t i = 0; i < p; ++i)
      if (covering.membership[i][q]) s.push_back(int(i));
    if (!s.empty()) supports.insert(std::move(s));
  }
  // Keep only the maximal supports.
  std::vector<std::vector<int>> maximal;
  for (const auto& s : supports) {
    bool dominated = false;
    for (const auto& t : supports)
      if (t.size() > s.size() &&
          std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(s);
  }
  return NerveComplex(p, std::move(maximal));
}

double bump(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0 / 3.0) return 1.0;
  if (t <= 1.0 / 12.0) return 24.0 * t * t;
  if (t <= 0.25) return 4.0 * t - 1.0 / 6.0;
  const double s = 1.0 / 3.0 - t;
  return 1.0 - 24.0 * s * s;
}

double bump_derivative(double t) {
  if (t <= 0.0 || t >= 1.0 / 3.0) return 0.0;
  if (t <= 1.0 / 12.0) return 48.0 * t;
  if (t <= 0.25) return 4.0;
  return 48.0 * (1.0 / 3.0 - t);
}

BarycentricPoint partition_map(const Covering& covering, std::size_t x) {
  BarycentricPoint out;
  double total = 0.0;
  for (std::size_t i = 0; i < covering.set_count(); ++i) {
    if (!covering.membership[i][x]) continue;
    const double phi =
        bump(covering.boundary_dist[i][x] / covering.radii[i]);
    if (phi <= 0.0) continue;
    out.support.push_back(int(i));
    out.coords.push_back(phi);
    total += phi;
  }
  if (total < 1.0 - 1e-9)
    throw std::runtime_error(
        "partition weights sum below 1: property 4 violated at sample " +
        std::to_string(x));
  for (double& c : out.coords) c /= total;
  return out;
}

double barycentric_distance(const BarycentricPoint& a,
                            const BarycentricPoint& b) {
  double sum = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.support.size() || j < b.support.size()) {
    if (j >= b.support.size() ||
        (i < a.support.size() && a.support[i] < b.support[j])) {
      sum += a.coords[i] * a.coords[i];
      ++i;
    } else if (i >= a.support.size() || b.support[j] < a.support[i]) {
      sum += b.coords[j] * b.coords[j];
      ++j;
    } else {
      const double d = a.coords[i] - b.coords[j];
      sum += d * d;
      ++i;
      ++j;
    }
  }
  return std::sqrt(sum);
}

namespace {

// Interior barycentric lattice of mesh 1/16 (refined to 1/(k+1) when the
// simplex dimension leaves no interior 1/16 points), enumerated as an
// odometer over the first k-1 digits; the barycenter is always included.
void lattice_points(int k, std::vector<std::vector<double>>& out) {
  const int total = k < 16 ? 16 : k + 1;
  const int remaining = total - k;
  const std::size_t cap = 200000;  // lattice growth guard in high dimension
  std::vector<int> digits(std::max(0, k - 1), 0);
  while (out.size() < cap) {
    int used = 0;
    for (int d : digits) used += d;
    if (used <= remaining) {
      std::vector<double> pt(k);
      double sum = 0.0;
      for (int i = 0; i < k - 1; ++i) {
        pt[i] = (1.0 + digits[i]) / total;
        sum += pt[i];
      }
      pt[k - 1] = 1.0 - sum;
      if (pt[k - 1] >= 1.0 / total - 1e-12) out.push_back(std::move(pt));
    }
    int pos = 0;
    while (pos < k - 1) {
      if (++digits[pos] <= remaining) break;
      digits[pos] = 0;
      ++pos;
    }
    if (pos >= k - 1) break;
  }
  out.push_back(std::vector<double>(k, 1.0 / k));
}

}  // namespace

RetractionResult retract_to_skeleton(std::vector<BarycentricPoint> samples,
                                     int target_dim, double gap_min) {
  RetractionResult res;
  res.min_gap = std::numeric_limits<double>::infinity();

  while (true) {
    // Find the largest support size above the target.
    std::size_t top = 0;
    for (const auto& s : samples) top = std::max(top, s.support.size());
    if (int(top) - 1 <= target_dim) break;

    // Group samples by support of that size.
    std::map<std::vector<int>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < samples.size(); ++i)
      if (samples[i].support.size() == top)
        groups[samples[i].support].push_back(i);

    for (const auto& [support, members] : groups) {
      const int k = int(support.size());
      std::vector<std::vector<double>> lattice;
      lattice_points(k, lattice);

      // Retraction center: lattice point farthest from the samples.
      double best_gap = -1.0;
      std::vector<double> center;
      for (const auto& cand : lattice) {
        double gap = std::numeric_limits<double>::infinity();
        for (std::size_t m : members) {
          double s = 0.0;
          for (int i = 0; i < k; ++i) {
            const double d = cand[i] - samples[m].coords[i];
            s += d * d;
          }
          gap = std::min(gap, std::sqrt(s));
        }
        if (gap > best_gap) {
          best_gap = gap;
          center = cand;
        }
      }
      if (best_gap < gap_min) {
        res.ok = false;
        res.failure = "no retraction center found in a " +
                      std::to_string(k - 1) + "-simplex with " +
                      std::to_string(members.size()) +
                      " mapped samples (gap " + std::to_string(best_gap) +
                      "); the covering is too dense (eta too large)";
        return res;
      }
      res.min_gap = std::min(res.min_gap, best_gap);

      // Push each sample radially from the center to the boundary.
      for (std::size_t m : members) {
        auto& pt = samples[m];
        double t_exit = std::numeric_limits<double>::infinity();
        for (int i = 0; i < k; ++i) {
          const double dir = pt.coords[i] - center[i];
          if (dir < 0.0) t_exit = std::min(t_exit, center[i] / (-dir));
        }
        BarycentricPoint pushed;
        double sum = 0.0;
        for (int i = 0; i < k; ++i) {
          double c = center[i] + t_exit * (pt.coords[i] - center[i]);
          if (c < 1e-12) c = 0.0;
          if (c > 0.0) {
            pushed.support.push_back(pt.support[i]);
            pushed.coords.push_back(c);
            sum += c;
          }
        }
        for (double& c : pushed.coords) c /= sum;
        samples[m] = std::move(pushed);
        ++res.pushes;
      }
    }
  }

  res.samples = std::move(samples);
  return res;
}

bool star_preimage_preserved(const Covering& covering,
                             const std::vector<BarycentricPoint>& mapped,
                             const std::vector<std::size_t>& sample_points) {
  if (mapped.size() != sample_points.size())
    throw std::invalid_argument("one mapped point per sample required");
  const std::size_t p = covering.set_count();
  const std::size_t n = p == 0 ? 0 : covering.membership[0].size();

  // Set-level intersections witnessed on the sample.
  std::vector<std::vector<bool>> meets(p, std::vector<bool>(p, false));
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t i = 0; i < p; ++i)
      if (covering.membership[i][q])
        for (std::size_t j = 0; j < p; ++j)
          if (covering.membership[j][q]) meets[i][j] = true;

  for (std::size_t s = 0; s < mapped.size(); ++s) {
    const std::size_t x = sample_points[s];
    for (int v : mapped[s].support) {
      bool covered = false;
      for (std::size_t j = 0; j < p && !covered; ++j)
        if (meets[j][v] && covering.membership[j][x]) covered = true;
      if (!covered) return false;
    }
  }
  return true;
}

}  // namespace conewerk
