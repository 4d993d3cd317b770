#include "conewerk/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "conewerk/sobol.hpp"

namespace conewerk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFixedTol = 1e-9;
constexpr double kAccumulationTol = 1e-6;
constexpr double kDedupTol = 1e-8;

Vec4 lorentz_covector(const HalfSpace& hs) {
  // {a.u <= b} in Klein coordinates came from <y, n> >= 0 with
  // a = -n_spatial, b = -n_0.
  return Vec4(-hs.offset, -hs.normal[0], -hs.normal[1], -hs.normal[2]);
}

struct WordTable {
  std::vector<Isometry> elements;  // non-identity, deduped
  std::vector<std::string> names;
};

// Breadth-first enumeration of group words with matrix dedup.  The
// basepoint sits at the chart origin; words fixing it are errors.
WordTable enumerate_words(const std::vector<Isometry>& generators,
                          Isometry::Kind kind, const DirichletOptions& opts) {
  WordTable table;
  std::vector<Isometry> alphabet;
  std::vector<std::string> alphabet_names;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    alphabet.push_back(generators[i]);
    alphabet_names.push_back("g" + std::to_string(i));
    alphabet.push_back(generators[i].inverse());
    alphabet_names.push_back("g" + std::to_string(i) + "^-1");
  }

  const Isometry id = Isometry::identity(kind);
  std::vector<Isometry> known{id};
  std::vector<const Isometry*> frontier{&known.front()};
  std::vector<std::string> frontier_names{""};

  auto is_known = [&](const Isometry& g) {
    for (const Isometry& k : known)
      if (g.approx_equal(k, kDedupTol)) return true;
    return false;
  };

  for (int len = 1; len <= opts.max_word_length; ++len) {
    std::vector<Isometry> next;
    std::vector<std::string> next_names;
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      for (std::size_t a = 0; a < alphabet.size(); ++a) {
        Isometry w = frontier[f]->compose(alphabet[a]);
        if (is_known(w)) continue;
        bool dup = false;
        for (const Isometry& n : next)
          if (w.approx_equal(n, kDedupTol)) {
            dup = true;
            break;
          }
        if (dup) continue;
        std::string name = frontier_names[f].empty()
                               ? alphabet_names[a]
                               : frontier_names[f] + "*" + alphabet_names[a];
        next.push_back(std::move(w));
        next_names.push_back(std::move(name));
      }
    }
    for (std::size_t i = 0; i < next.size(); ++i) {
      known.push_back(next[i]);
      table.elements.push_back(next[i]);
      table.names.push_back(next_names[i]);
    }
    if (int(table.elements.size()) > opts.max_elements)
      throw std::runtime_error("word enumeration exceeded the element cap");
    // Rebuild frontier pointers after the vector reallocation.
    frontier.clear();
    frontier_names.clear();
    const std::size_t start = known.size() - next.size();
    for (std::size_t i = start; i < known.size(); ++i) {
      frontier.push_back(&known[i]);
      frontier_names.push_back(table.names[i - 1]);
    }
    if (frontier.empty()) break;
  }
  return table;
}

void check_action(const WordTable& table, Isometry::Kind kind) {
  const Vec3 origin = Vec3::Zero();
  std::vector<Vec3> images;
  images.reserve(table.elements.size());
  for (std::size_t i = 0; i < table.elements.size(); ++i) {
    const Vec3 img = table.elements[i].apply_chart(origin);
    if (chart_distance(kind, origin, img) < kFixedTol)
      throw std::invalid_argument("basepoint fixed by non-identity word " +
                                  table.names[i]);
    images.push_back(img);
  }
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (chart_distance(kind, images[i], images[j]) < kAccumulationTol)
        throw std::runtime_error(
            "non-discreteness heuristic: bisectors of words " +
            table.names[i] + " and " + table.names[j] +
            " accumulate within 1e-6");
}

double dihedral_angle(Isometry::Kind kind, const HalfSpace& a,
                      const HalfSpace& b) {
  if (kind == Isometry::Kind::Euclidean) {
    const double c = std::clamp(-a.normal.dot(b.normal), -1.0, 1.0);
    return std::acos(c);
  }
  Vec4 na = lorentz_covector(a);
  Vec4 nb = lorentz_covector(b);
  na /= std::sqrt(std::max(1e-300, minkowski_dot(na, na)));
  nb /= std::sqrt(std::max(1e-300, minkowski_dot(nb, nb)));
  // The stored normals point outward, so negate to pair inward conormals.
  const double c = std::clamp(-minkowski_dot(na, nb), -1.0, 1.0);
  return std::acos(c);
}

// Chart map of a group element (Klein action for Lorentz kind).
Vec3 map_chart(const Isometry& g, const Vec3& u) { return g.apply_chart(u); }

void finish_domain(DirichletDomain& dom, const DirichletOptions& opts) {
  const auto& faces = dom.poly.faces();
  dom.real_face_count = 0;
  dom.cutoff_bounded = false;
  for (const auto& f : faces) {
    if (f.plane.source == -1)
      dom.cutoff_bounded = true;
    else if (f.plane.source >= 0)
      ++dom.real_face_count;
  }

  auto truncated = [&](int fi) {
    for (const Vec3& v : faces[fi].loop) {
      if (v.cwiseAbs().maxCoeff() >= dom.box_half - 1e-9) return true;
      // Chart vertices at or beyond the Klein sphere are ideal.
      if (dom.kind == Isometry::Kind::Lorentz && v.norm() >= 1.0 - 1e-9)
        return true;
    }
    return false;
  };

  // Pairings: the face of word w maps onto the face of w^-1 by w^-1; the
  // two wedge faces of a sector pair by the alpha-rotation.
  std::vector<int> face_of_source(dom.elements.size() + 2, -1);
  std::vector<int> wedge_faces;
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    if (faces[fi].plane.source >= 0)
      face_of_source[faces[fi].plane.source] = int(fi);
    else if (faces[fi].plane.source == -2)
      wedge_faces.push_back(int(fi));
  }

  // Matched-vertex error when both faces are genuine polygons of the
  // domain; when the cutoff box truncated either face the polygons need
  // not correspond, so fall back to the distance of the mapped vertices
  // from the partner's supporting plane.
  auto match_error = [&](int face_a, int face_b, const Isometry& map) {
    const bool plane_only = truncated(face_a) || truncated(face_b);
    double worst = 0.0;
    for (const Vec3& v : faces[face_a].loop) {
      const Vec3 mv = map_chart(map, v);
      double best;
      if (plane_only) {
        best = std::abs(faces[face_b].plane.signed_distance(mv));
      } else {
        best = std::numeric_limits<double>::infinity();
        for (const Vec3& w : faces[face_b].loop)
          best = std::min(best, chart_distance(dom.kind, mv, w));
      }
      worst = std::max(worst, best);
    }
    return worst;
  };

  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    const int src = faces[fi].plane.source;
    if (src < 0) continue;
    FacePairing p;
    p.face = int(fi);
    p.word = src;
    const Isometry inv = dom.elements[src].inverse();
    for (std::size_t j = 0; j < dom.elements.size(); ++j)
      if (dom.elements[j].approx_equal(inv, kDedupTol)) {
        p.partner_word = int(j);
        break;
      }
    if (p.partner_word >= 0) p.partner_face = face_of_source[p.partner_word];
    if (p.partner_face >= 0)
      p.vertex_match_error = match_error(p.face, p.partner_face, inv);
    dom.pairings.push_back(p);
  }
  if (wedge_faces.size() == 2) {
    const Isometry rot =
        dom.kind == Isometry::Kind::Euclidean
            ? Isometry::rotation(Vec3::UnitZ(), dom.wedge_angle)
            : Isometry::lorentz_rotation_z(dom.wedge_angle);
    for (int k = 0; k < 2; ++k) {
      FacePairing p;
      p.face = wedge_faces[k];
      p.partner_face = wedge_faces[1 - k];
      p.word = -2;
      p.partner_word = -2;
      const Isometry map = k == 0 ? rot : rot.inverse();
      // Pick the direction that actually carries the face onto its partner.
      const double e1 = match_error(p.face, p.partner_face, map);
      const double e2 = match_error(p.face, p.partner_face, map.inverse());
      p.vertex_match_error = std::min(e1, e2);
      dom.pairings.push_back(p);
    }
  }

  dom.max_dihedral = 0.0;
  for (const auto& e : dom.poly.edges()) {
    const auto& fa = faces[e.face_a].plane;
    const auto& fb = faces[e.face_b].plane;
    if (fa.source == -1 || fb.source == -1) continue;  // truncation artifact
    dom.max_dihedral =
        std::max(dom.max_dihedral, dihedral_angle(dom.kind, fa, fb));
  }
  dom.convex = dom.max_dihedral <= kPi + 1e-9;

  if (dom.kind == Isometry::Kind::Euclidean) {
    dom.volume = dom.poly.volume_from(Vec3::Zero());
    dom.volume_se = 0.0;
  } else {
    const auto [v, se] = polytope_metric_volume(
        dom.poly, Curvature(-1.0), opts.seed, opts.qmc_log2_points,
        opts.qmc_blocks);
    dom.volume = v;
    dom.volume_se = se;
  }
}

}  // namespace

HalfSpace bisector(const Isometry& g, const Vec3& x_chart) {
  HalfSpace hs;
  if (g.kind() == Isometry::Kind::Euclidean) {
    const Vec3 gx = g.apply(x_chart);
    const Vec3 diff = gx - x_chart;
    const double len = diff.norm();
    if (len < kFixedTol)
      throw std::invalid_argument("bisector undefined: g fixes the point");
    hs.normal = diff / len;
    hs.offset = hs.normal.dot(0.5 * (x_chart + gx));
    return hs;
  }
  const Vec4 x4 = hyperboloid_from_klein(x_chart);
  const Vec4 gx4 = g.apply(x4);
  if (hyperbolic_distance(x4, gx4) < kFixedTol)
    throw std::invalid_argument("bisector undefined: g fixes the point");
  const Vec4 n = x4 - gx4;  // keeps the x side: <y, n> >= 0
  const Vec3 a(-n[1], -n[2], -n[3]);
  const double len = a.norm();
  if (len < 1e-300)
    throw std::invalid_argument("degenerate bisector covector");
  hs.normal = a / len;
  hs.offset = -n[0] / len;
  return hs;
}

const FacePairing* DirichletDomain::pairing_of_face(int face) const {
  for (const auto& p : pairings)
    if (p.face == face) return &p;
  return nullptr;
}

namespace {

DirichletDomain build_domain(const std::vector<Isometry>& conj_gens,
                             Isometry::Kind kind, double wedge_angle,
                             const DirichletOptions& opts) {
  DirichletDomain dom;
  dom.kind = kind;
  dom.wedge_angle = wedge_angle;

  WordTable table = enumerate_words(conj_gens, kind, opts);
  check_action(table, kind);
  dom.elements = table.elements;
  dom.element_names = table.names;

  // Truncation box circumscribing the cutoff ball in the chart.
  dom.box_half = kind == Isometry::Kind::Euclidean ? opts.cutoff
                                                   : std::tanh(opts.cutoff);
  dom.poly = ConvexPolyhedron::box(Vec3::Zero(), dom.box_half);

  if (wedge_angle > 0.0 && wedge_angle < 2.0 * kPi) {
    const double half = wedge_angle / 2.0;
    HalfSpace w1, w2;
    w1.normal = Vec3(-std::sin(half), std::cos(half), 0.0);
    w1.offset = 0.0;
    w1.source = -2;
    w2.normal = Vec3(-std::sin(half), -std::cos(half), 0.0);
    w2.offset = 0.0;
    w2.source = -2;
    dom.poly.clip(w1);
    dom.poly.clip(w2);
  }

  // Elements whose bisector can meet the cutoff ball, nearest first.
  std::vector<std::pair<double, int>> candidates;
  for (std::size_t i = 0; i < table.elements.size(); ++i) {
    const double d = chart_distance(
        kind, Vec3::Zero(), table.elements[i].apply_chart(Vec3::Zero()));
    if (d <= 2.0 * opts.cutoff + 1e-9) candidates.push_back({d, int(i)});
  }
  std::sort(candidates.begin(), candidates.end());

  for (const auto& [d, idx] : candidates) {
    HalfSpace hs = bisector(table.elements[idx], Vec3::Zero());
    hs.source = idx;
    dom.poly.clip(hs);
  }

  finish_domain(dom, opts);
  return dom;
}

}  // namespace

DirichletDomain dirichlet_domain(const std::vector<Isometry>& generators,
                                 const Vec3& basepoint_chart,
                                 const DirichletOptions& opts) {
  if (generators.empty()) {
    DirichletDomain dom;
    dom.kind = Isometry::Kind::Euclidean;
    dom.box_half = opts.cutoff;
    dom.poly = ConvexPolyhedron::box(Vec3::Zero(), dom.box_half);
    dom.cutoff_bounded = true;
    dom.volume = dom.poly.volume_from(Vec3::Zero());
    return dom;
  }

  const Isometry::Kind kind = generators.front().kind();
  for (const auto& g : generators) {
    if (g.kind() != kind)
      throw std::invalid_argument("generators of mixed kinds");
    if (!g.is_valid(1e-8))
      throw std::invalid_argument("generator violates its form invariant");
  }

  // Normalize the basepoint to the chart origin.
  const Isometry to_base = kind == Isometry::Kind::Euclidean
                               ? Isometry::translation(basepoint_chart)
                               : Isometry::lorentz_translation_to(basepoint_chart);
  const Isometry from_base = to_base.inverse();
  std::vector<Isometry> conj;
  conj.reserve(generators.size());
  for (const auto& g : generators)
    conj.push_back(from_base.compose(g).compose(to_base));

  return build_domain(conj, kind, 0.0, opts);
}

DirichletDomain singular_dirichlet(const SectorLift& lift,
                                   const std::vector<Isometry>& deck,
                                   double basepoint_height,
                                   const DirichletOptions& opts) {
  const Isometry::Kind kind = lift.kind;
  const double alpha = lift.alpha.value();
  if (alpha > kPi + 1e-12 && !lift.alpha.is_nonsingular())
    throw std::invalid_argument(
        "sector wedge with alpha in (pi, 2pi) is not a half-space "
        "intersection; only alpha <= pi or alpha = 2pi are supported");

  for (const auto& g : deck)
    if (g.kind() != kind)
      throw std::invalid_argument("deck transformation of mixed kind");

  // Slide the basepoint down the axis to the origin; planes through the
  // axis are preserved, so the wedge is unaffected.
  const Isometry to_base =
      kind == Isometry::Kind::Euclidean
          ? Isometry::translation(Vec3(0, 0, basepoint_height))
          : Isometry::boost(Vec3::UnitZ(), basepoint_height);
  const Isometry from_base = to_base.inverse();
  std::vector<Isometry> conj;
  for (const auto& g : deck)
    conj.push_back(from_base.compose(g).compose(to_base));

  // Deck maps must preserve the axis setup.
  for (std::size_t i = 0; i < conj.size(); ++i) {
    for (double h : {0.0, 0.37}) {
      const Vec3 axis_pt(0, 0, h);
      const Vec3 img = conj[i].apply_chart(axis_pt);
      if (std::abs(img[0]) > 1e-9 || std::abs(img[1]) > 1e-9)
        throw std::invalid_argument("deck transformation " + std::to_string(i) +
                                    " does not preserve the singular axis");
    }
  }

  if (lift.alpha.is_nonsingular())
    return build_domain(conj, kind, 0.0, opts);
  return build_domain(conj, kind, alpha, opts);
}

namespace {

struct QmcEstimate {
  std::vector<double> mean;  // per radius
  std::vector<double> se;
};

// Randomized QMC over the box [lo,hi] of the per-radius masses
// integral of weight(u) * [u in domain] * [metric_r(u) <= r_k].
QmcEstimate qmc_masses(const ConvexPolyhedron& poly, Curvature K,
                       const Vec3& lo, const Vec3& hi,
                       const std::vector<double>& radii, std::uint64_t seed,
                       int log2_points, int blocks) {
  const std::size_t total = std::size_t{1} << log2_points;
  const std::size_t per_block = std::max<std::size_t>(1, total / blocks);
  const Vec3 extent = hi - lo;
  const double box_vol = extent[0] * extent[1] * extent[2];
  const double k = K.value();
  const double sqk = k < 0.0 ? std::sqrt(-k) : 0.0;
  const double dens_scale = k < 0.0 ? 1.0 / (sqk * sqk * sqk) : 1.0;

  QmcEstimate est;
  est.mean.assign(radii.size(), 0.0);
  est.se.assign(radii.size(), 0.0);
  if (box_vol <= 0.0) return est;

  std::vector<std::vector<double>> block_vals(
      radii.size(), std::vector<double>(blocks, 0.0));

  SobolSequence sobol(3);
  double pt[3];
  for (int b = 0; b < blocks; ++b) {
    const std::vector<double> shift = qmc_block_shift(seed, b, 3);
    std::vector<double> acc(radii.size(), 0.0);
    for (std::size_t i = 0; i < per_block; ++i) {
      sobol.next(pt);
      Vec3 u;
      for (int d = 0; d < 3; ++d) {
        double c = pt[d] + shift[d];
        if (c >= 1.0) c -= 1.0;
        u[d] = lo[d] + c * extent[d];
      }
      if (!poly.contains(u, 1e-12)) continue;
      double w = 1.0, dist;
      if (k < 0.0) {
        const double n2 = u.squaredNorm();
        if (n2 >= 1.0) continue;
        const double denom = 1.0 - n2;
        w = dens_scale / (denom * denom);
        dist = std::atanh(std::sqrt(n2)) / sqk;
      } else {
        dist = u.norm();
      }
      const auto it = std::lower_bound(radii.begin(), radii.end(), dist);
      for (std::size_t r = it - radii.begin(); r < radii.size(); ++r)
        acc[r] += w;
    }
    for (std::size_t r = 0; r < radii.size(); ++r)
      block_vals[r][b] = acc[r] * box_vol / double(per_block);
  }

  for (std::size_t r = 0; r < radii.size(); ++r) {
    double m = 0.0;
    for (double v : block_vals[r]) m += v;
    m /= blocks;
    double var = 0.0;
    for (double v : block_vals[r]) var += (v - m) * (v - m);
    var /= std::max(1, blocks - 1);
    est.mean[r] = m;
    est.se[r] = std::sqrt(var / blocks);
  }
  return est;
}

}  // namespace

std::vector<ProfilePoint> bishop_gromov_profile(
    const ConvexPolyhedron& domain, Curvature K, const Vec3& center_chart,
    std::vector<double> radii, std::uint64_t seed, int log2_points,
    int blocks) {
  if (radii.empty()) return {};
  if (!std::is_sorted(radii.begin(), radii.end()))
    throw std::invalid_argument("radii must be sorted increasing");
  if (!domain.contains(center_chart, -1e-12))
    throw std::invalid_argument("center outside the domain");

  // Re-express the polytope around the center.
  ConvexPolyhedron poly = domain;
  const double k = K.value();
  if (k == 0.0) {
    if (center_chart.norm() > 0.0) {
      Vec3 lo0, hi0;
      domain.bounding_box(lo0, hi0);
      ConvexPolyhedron base = ConvexPolyhedron::box(
          0.5 * (lo0 + hi0) - center_chart, 0.5 * (hi0 - lo0).maxCoeff() + 1.0);
      for (const auto& f : domain.faces()) {
        HalfSpace hs = f.plane;
        hs.offset -= hs.normal.dot(center_chart);
        base.clip(hs);
      }
      poly = base;
    }
  } else {
    const Isometry to_center = Isometry::lorentz_translation_to(center_chart);
    const Isometry from_center = to_center.inverse();
    Vec3 lo(-1, -1, -1), hi(1, 1, 1);
    ConvexPolyhedron base = ConvexPolyhedron::box(Vec3::Zero(), 1.0);
    for (const auto& f : domain.faces()) {
      const Vec4 n = lorentz_covector(f.plane);
      const Vec4 np = from_center.lorentz_matrix() * n;
      HalfSpace hs;
      const Vec3 a(-np[1], -np[2], -np[3]);
      const double len = a.norm();
      if (len < 1e-300) continue;
      hs.normal = a / len;
      hs.offset = -np[0] / len;
      hs.source = f.plane.source;
      base.clip(hs);
    }
    poly = base;
  }

  const double sqk = k < 0.0 ? std::sqrt(-k) : 0.0;
  const double rmax_chart =
      k < 0.0 ? std::tanh(sqk * radii.back()) : radii.back();
  Vec3 lo, hi;
  poly.bounding_box(lo, hi);
  lo = lo.cwiseMax(Vec3::Constant(-rmax_chart));
  hi = hi.cwiseMin(Vec3::Constant(rmax_chart));
  for (int d = 0; d < 3; ++d)
    if (lo[d] >= hi[d]) return std::vector<ProfilePoint>(radii.size());

  const QmcEstimate est =
      qmc_masses(poly, K, lo, hi, radii, seed, log2_points, blocks);

  std::vector<ProfilePoint> out(radii.size());
  const ConeAngle full(2.0 * kPi);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double vk = ball_volume(K, full, radii[i]);
    out[i].r = radii[i];
    out[i].ratio = est.mean[i] / vk;
    out[i].se = est.se[i] / vk;
  }
  return out;
}

std::pair<double, double> polytope_metric_volume(const ConvexPolyhedron& poly,
                                                 Curvature K,
                                                 std::uint64_t seed,
                                                 int log2_points, int blocks) {
  Vec3 lo, hi;
  poly.bounding_box(lo, hi);
  if (K.value() < 0.0) {
    lo = lo.cwiseMax(Vec3::Constant(-1.0 + 1e-12));
    hi = hi.cwiseMin(Vec3::Constant(1.0 - 1e-12));
  }
  const std::vector<double> radii{std::numeric_limits<double>::infinity()};
  const QmcEstimate est =
      qmc_masses(poly, K, lo, hi, radii, seed, log2_points, blocks);
  return {est.mean[0], est.se[0]};
}

long long packing_count_bound(double R, double eps) {
  if (!(eps > 0.0 && eps <= R))
    throw std::invalid_argument("need 0 < eps <= R");
  const double a = volume_comparison_constant(std::max(8.0, R + eps));
  const double v = ball_volume(Curvature(-1.0), ConeAngle(2.0 * kPi), R + eps);
  return static_cast<long long>(std::ceil(a * v / (eps * eps * eps)));
}

}  // namespace conewerk
