#include "conewerk/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace conewerk {

namespace {

constexpr double kOnPlane = 1e-11;

// Orders coplanar points into a convex loop around their centroid.
std::vector<Vec3> order_section(const std::vector<Vec3>& pts,
                                const Vec3& normal) {
  Vec3 centroid = Vec3::Zero();
  for (const Vec3& p : pts) centroid += p;
  centroid /= double(pts.size());
  Vec3 e1 = normal.unitOrthogonal();
  Vec3 e2 = normal.cross(e1);
  std::vector<std::pair<double, Vec3>> ang;
  ang.reserve(pts.size());
  for (const Vec3& p : pts)
    ang.push_back({std::atan2(e2.dot(p - centroid), e1.dot(p - centroid)), p});
  std::sort(ang.begin(), ang.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Vec3> loop;
  loop.reserve(ang.size());
  for (const auto& [a, p] : ang) loop.push_back(p);
  return loop;
}

void dedup_points(std::vector<Vec3>& pts, double tol) {
  std::vector<Vec3> out;
  for (const Vec3& p : pts) {
    bool seen = false;
    for (const Vec3& q : out)
      if ((p - q).norm() <= tol) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(p);
  }
  pts.swap(out);
}

// Orient the loop so its Newell normal points along the face normal.
void orient_loop(std::vector<Vec3>& loop, const Vec3& normal) {
  Vec3 newell = Vec3::Zero();
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Vec3& a = loop[i];
    const Vec3& b = loop[(i + 1) % loop.size()];
    newell += a.cross(b);
  }
  if (newell.dot(normal) < 0.0) std::reverse(loop.begin(), loop.end());
}

}  // namespace

ConvexPolyhedron ConvexPolyhedron::box(const Vec3& center, double half_width) {
  ConvexPolyhedron poly;
  const double h = half_width;
  for (int axis = 0; axis < 3; ++axis) {
    for (int sign : {-1, 1}) {
      Face f;
      f.plane.normal = Vec3::Zero();
      f.plane.normal[axis] = sign;
      f.plane.offset = sign * center[axis] + h;
      f.plane.source = -1;
      // The four corners of this facet.
      const int u = (axis + 1) % 3, v = (axis + 2) % 3;
      for (const auto& [su, sv] :
           std::vector<std::pair<int, int>>{{-1, -1}, {-1, 1}, {1, 1}, {1, -1}}) {
        Vec3 p = center;
        p[axis] += sign * h;
        p[u] += su * h;
        p[v] += sv * h;
        f.loop.push_back(p);
      }
      orient_loop(f.loop, f.plane.normal);
      poly.faces_.push_back(std::move(f));
    }
  }
  return poly;
}

bool ConvexPolyhedron::clip(const HalfSpace& hs) {
  if (faces_.empty()) return false;

  // Scale-aware tolerance for on-plane classification.
  double scale = 1.0;
  for (const Face& f : faces_)
    for (const Vec3& v : f.loop) scale = std::max(scale, v.cwiseAbs().maxCoeff());
  const double tol = kOnPlane * scale;

  bool any_outside = false, any_inside = false;
  for (const Face& f : faces_)
    for (const Vec3& v : f.loop) {
      const double s = hs.signed_distance(v);
      if (s > tol) any_outside = true;
      if (s < -tol) any_inside = true;
    }
  if (!any_outside) return true;  // nothing to cut
  if (!any_inside) {
    faces_.clear();
    return false;
  }

  std::vector<Face> next;
  std::vector<Vec3> section;
  for (Face& f : faces_) {
    std::vector<Vec3> clipped;
    const std::size_t n = f.loop.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec3& a = f.loop[i];
      const Vec3& b = f.loop[(i + 1) % n];
      const double sa = hs.signed_distance(a);
      const double sb = hs.signed_distance(b);
      if (sa <= tol) clipped.push_back(a);
      const bool a_in = sa <= tol, b_in = sb <= tol;
      if (a_in != b_in && std::abs(sa - sb) > 0.0) {
        const double t = sa / (sa - sb);
        if (t > 0.0 && t < 1.0) {
          const Vec3 x = a + t * (b - a);
          clipped.push_back(x);
          section.push_back(x);
        } else if (t <= 0.0) {
          section.push_back(a);
        } else {
          section.push_back(b);
        }
      }
    }
    dedup_points(clipped, tol);
    if (clipped.size() >= 3) {
      Face kept;
      kept.plane = f.plane;
      kept.loop = std::move(clipped);
      orient_loop(kept.loop, kept.plane.normal);
      next.push_back(std::move(kept));
    }
  }

  dedup_points(section, 10.0 * tol);
  if (section.size() >= 3) {
    Face cut;
    cut.plane = hs;
    cut.loop = order_section(section, hs.normal);
    orient_loop(cut.loop, cut.plane.normal);
    next.push_back(std::move(cut));
  }

  faces_ = std::move(next);
  if (faces_.size() < 4) faces_.clear();  // degenerate remainder
  return !faces_.empty();
}

std::vector<Vec3> ConvexPolyhedron::vertices(double tol) const {
  std::vector<Vec3> pts;
  for (const Face& f : faces_)
    for (const Vec3& v : f.loop) pts.push_back(v);
  dedup_points(pts, tol);
  return pts;
}

std::vector<ConvexPolyhedron::Edge> ConvexPolyhedron::edges(double tol) const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    for (std::size_t j = i + 1; j < faces_.size(); ++j) {
      std::vector<Vec3> shared;
      for (const Vec3& a : faces_[i].loop)
        for (const Vec3& b : faces_[j].loop)
          if ((a - b).norm() <= tol) shared.push_back(a);
      dedup_points(shared, tol);
      if (shared.size() == 2) {
        Edge e;
        e.face_a = int(i);
        e.face_b = int(j);
        e.v0 = shared[0];
        e.v1 = shared[1];
        out.push_back(e);
      }
    }
  }
  return out;
}

bool ConvexPolyhedron::contains(const Vec3& u, double tol) const {
  if (faces_.empty()) return false;
  for (const Face& f : faces_)
    if (f.plane.signed_distance(u) > tol) return false;
  return true;
}

double ConvexPolyhedron::volume_from(const Vec3& c) const {
  double vol = 0.0;
  for (const Face& f : faces_) {
    const std::size_t n = f.loop.size();
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const Vec3 a = f.loop[0] - c;
      const Vec3 b = f.loop[i] - c;
      const Vec3 d = f.loop[i + 1] - c;
      vol += a.dot(b.cross(d));
    }
  }
  return vol / 6.0;
}

void ConvexPolyhedron::bounding_box(Vec3& lo, Vec3& hi) const {
  lo = Vec3::Constant(std::numeric_limits<double>::infinity());
  hi = -lo;
  for (const Face& f : faces_)
    for (const Vec3& v : f.loop) {
      lo = lo.cwiseMin(v);
      hi = hi.cwiseMax(v);
    }
}

}  // namespace conewerk
