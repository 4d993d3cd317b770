#include "conewerk/euclidean_models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace conewerk {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleTol = 1e-9;

void require_angle(double a) {
  if (!(a > 0.0 && a <= kPi + kAngleTol))
    throw std::domain_error("cone angle must lie in (0, pi]");
}
}  // namespace

double orbifold_euler(const std::vector<double>& angles, OrbifoldBase base) {
  double defect = 0.0;
  for (double a : angles) {
    require_angle(a);
    defect += 1.0 - a / kTwoPi;
  }
  switch (base) {
    case OrbifoldBase::Sphere:
      return 2.0 - defect;
    case OrbifoldBase::DiskSilvered:
      return 1.0 - defect;
    case OrbifoldBase::Torus:
    case OrbifoldBase::Klein:
      return -defect;
  }
  throw std::logic_error("unreachable");
}

std::vector<std::array<int, 3>> euclidean_triples() {
  std::vector<std::array<int, 3>> out;
  for (int p1 = 2; p1 <= 100; ++p1)
    for (int p2 = p1; p2 <= 100; ++p2)
      for (int p3 = p2; p3 <= 100; ++p3)
        if (p2 * p3 + p1 * p3 + p1 * p2 == p1 * p2 * p3)
          out.push_back({p1, p2, p3});
  std::sort(out.begin(), out.end());
  return out;
}

int SoulDescriptor::dim() const {
  switch (kind) {
    case SoulKind::Point:
    case SoulKind::SingularPoint:
      return 0;
    case SoulKind::Circle:
    case SoulKind::SilveredInterval:
      return 1;
    default:
      return 2;
  }
}

SoulDescriptor SoulDescriptor::point() { return SoulDescriptor{}; }

SoulDescriptor SoulDescriptor::singular_point(double alpha) {
  require_angle(alpha);
  SoulDescriptor s;
  s.kind = SoulKind::SingularPoint;
  s.cone_angle = alpha;
  return s;
}

namespace {
void require_length(double l) {
  if (!(l > 0.0)) throw std::domain_error("length must be > 0");
}
void require_area(double a) {
  if (!(a > 0.0)) throw std::domain_error("area must be > 0");
}
}  // namespace

SoulDescriptor SoulDescriptor::circle(double length) {
  require_length(length);
  SoulDescriptor s;
  s.kind = SoulKind::Circle;
  s.length = length;
  return s;
}

SoulDescriptor SoulDescriptor::singular_circle(double length, double alpha) {
  require_length(length);
  require_angle(alpha);
  SoulDescriptor s;
  s.kind = SoulKind::Circle;
  s.length = length;
  s.circle_fiber_singular = true;
  s.cone_angle = alpha;
  return s;
}

SoulDescriptor SoulDescriptor::silvered_interval(double length) {
  require_length(length);
  SoulDescriptor s;
  s.kind = SoulKind::SilveredInterval;
  s.length = length;
  return s;
}

SoulDescriptor SoulDescriptor::torus(double area) {
  require_area(area);
  SoulDescriptor s;
  s.kind = SoulKind::Torus;
  s.area = area;
  return s;
}

SoulDescriptor SoulDescriptor::sphere_with_cones(std::vector<double> angles,
                                                 double area) {
  require_area(area);
  for (double a : angles) require_angle(a);
  SoulDescriptor s;
  s.kind = SoulKind::SphereWithCones;
  s.angles = std::move(angles);
  s.area = area;
  return s;
}

#define CONEWERK_AREA_SOUL(fn, kind_)                \
  SoulDescriptor SoulDescriptor::fn(double area) {   \
    require_area(area);                              \
    SoulDescriptor s;                                \
    s.kind = SoulKind::kind_;                        \
    s.area = area;                                   \
    return s;                                        \
  }

CONEWERK_AREA_SOUL(klein_bottle, KleinBottle)
CONEWERK_AREA_SOUL(projective_plane_two_cones, ProjectivePlaneTwoCones)
CONEWERK_AREA_SOUL(disk_two_cones_silvered, DiskTwoConesSilvered)
CONEWERK_AREA_SOUL(annulus_silvered, AnnulusSilvered)
CONEWERK_AREA_SOUL(moebius_silvered, MoebiusSilvered)
#undef CONEWERK_AREA_SOUL

std::string to_string(LocalModelName name) {
  switch (name) {
    case LocalModelName::R3: return "R3";
    case LocalModelName::R3_alpha: return "R3(alpha)";
    case LocalModelName::S1_twist_R2: return "S1 x~ R2";
    case LocalModelName::S1_twist_ConeDisk: return "S1 x~ cone-disk";
    case LocalModelName::Pillow: return "pillow";
    case LocalModelName::T2xR: return "T2 x R";
    case LocalModelName::S2abc_xR: return "S2(a,b,c) x R";
    case LocalModelName::S2_4pi_xR: return "S2(pi,pi,pi,pi) x R";
    case LocalModelName::K2_twist_R: return "K2 x~ R";
    case LocalModelName::P2pipi_twist_R: return "P2(pi,pi) x~ R";
    case LocalModelName::Quot_S2_4pi_D2pipi: return "D2(pi,pi)-quotient";
    case LocalModelName::Quot_T2_annulus: return "annulus-quotient";
    case LocalModelName::Quot_K2_moebius: return "moebius-quotient";
  }
  throw std::logic_error("unreachable");
}

LocalModel classify_soul(const SoulDescriptor& soul) {
  LocalModel m;
  m.soul = soul;
  switch (soul.kind) {
    case SoulKind::Point:
      m.name = LocalModelName::R3;
      return m;
    case SoulKind::SingularPoint:
      m.name = LocalModelName::R3_alpha;
      return m;
    case SoulKind::Circle:
      m.name = soul.circle_fiber_singular ? LocalModelName::S1_twist_ConeDisk
                                          : LocalModelName::S1_twist_R2;
      return m;
    case SoulKind::SilveredInterval:
      m.name = LocalModelName::Pillow;
      m.double_cover = LocalModelName::S1_twist_R2;
      return m;
    case SoulKind::Torus:
      m.name = LocalModelName::T2xR;
      return m;
    case SoulKind::SphereWithCones: {
      const double chi = orbifold_euler(soul.angles, OrbifoldBase::Sphere);
      if (std::abs(chi) > kAngleTol)
        throw std::domain_error("sphere soul is not Euclidean (chi != 0)");
      if (soul.angles.size() == 3) {
        m.name = LocalModelName::S2abc_xR;
        return m;
      }
      if (soul.angles.size() == 4) {
        for (double a : soul.angles)
          if (std::abs(a - kPi) > kAngleTol)
            throw std::domain_error(
                "Euclidean 4-cone sphere must have all angles pi");
        m.name = LocalModelName::S2_4pi_xR;
        return m;
      }
      throw std::domain_error("Euclidean sphere soul needs 3 or 4 cones");
    }
    case SoulKind::KleinBottle:
      m.name = LocalModelName::K2_twist_R;
      return m;
    case SoulKind::ProjectivePlaneTwoCones:
      m.name = LocalModelName::P2pipi_twist_R;
      return m;
    case SoulKind::DiskTwoConesSilvered:
      m.name = LocalModelName::Quot_S2_4pi_D2pipi;
      m.double_cover = LocalModelName::S2_4pi_xR;
      return m;
    case SoulKind::AnnulusSilvered:
      m.name = LocalModelName::Quot_T2_annulus;
      m.double_cover = LocalModelName::T2xR;
      return m;
    case SoulKind::MoebiusSilvered:
      m.name = LocalModelName::Quot_K2_moebius;
      m.double_cover = LocalModelName::K2_twist_R;
      return m;
  }
  throw std::logic_error("unreachable");
}

LocalModel double_cover_model(const LocalModel& m) {
  switch (m.name) {
    case LocalModelName::Pillow:
      return classify_soul(SoulDescriptor::circle(2.0 * m.soul.length));
    case LocalModelName::Quot_S2_4pi_D2pipi:
      return classify_soul(SoulDescriptor::sphere_with_cones(
          {kPi, kPi, kPi, kPi}, 2.0 * m.soul.area));
    case LocalModelName::Quot_T2_annulus:
      return classify_soul(SoulDescriptor::torus(2.0 * m.soul.area));
    case LocalModelName::Quot_K2_moebius:
      return classify_soul(SoulDescriptor::klein_bottle(2.0 * m.soul.area));
    default:
      throw std::domain_error("model is not a quotient; no double cover tag");
  }
}

MargulisType margulis_type(LocalModelName name) {
  switch (name) {
    case LocalModelName::T2xR:
    case LocalModelName::S1_twist_R2:
    case LocalModelName::S1_twist_ConeDisk:
      return MargulisType::A;
    case LocalModelName::S2abc_xR:
    case LocalModelName::S2_4pi_xR:
    case LocalModelName::Pillow:
      return MargulisType::B;
    case LocalModelName::P2pipi_twist_R:
    case LocalModelName::Quot_S2_4pi_D2pipi:
      return MargulisType::C;
    case LocalModelName::K2_twist_R:
    case LocalModelName::Quot_T2_annulus:
    case LocalModelName::Quot_K2_moebius:
      return MargulisType::Excluded;
    case LocalModelName::R3:
    case LocalModelName::R3_alpha:
      // Point souls do not occur in the collapsed classification; they
      // are the large-injectivity models.
      return MargulisType::Excluded;
  }
  throw std::logic_error("unreachable");
}

std::string to_string(MargulisType t) {
  switch (t) {
    case MargulisType::A: return "A";
    case MargulisType::B: return "B";
    case MargulisType::C: return "C";
    case MargulisType::Excluded: return "excluded";
  }
  throw std::logic_error("unreachable");
}

double tube_volume(const LocalModel& m, double nu) {
  if (!(nu > 0.0)) throw std::domain_error("nu must be > 0");
  const SoulDescriptor& s = m.soul;
  switch (s.dim()) {
    case 0: {
      const double frac =
          s.kind == SoulKind::SingularPoint ? s.cone_angle / kTwoPi : 1.0;
      return frac * 4.0 / 3.0 * kPi * nu * nu * nu;
    }
    case 1: {
      if (s.kind == SoulKind::SilveredInterval)
        return s.length * kPi * nu * nu;  // half of the doubled circle tube
      const double frac =
          s.circle_fiber_singular ? s.cone_angle / kTwoPi : 1.0;
      return s.length * frac * kPi * nu * nu;
    }
    case 2:
      return 2.0 * s.area * nu;
    default:
      throw std::logic_error("unreachable");
  }
}

std::vector<LocalModel> local_model_catalogue() {
  std::vector<LocalModel> out;
  out.push_back(classify_soul(SoulDescriptor::point()));
  out.push_back(classify_soul(SoulDescriptor::singular_point(kPi / 2.0)));
  out.push_back(classify_soul(SoulDescriptor::circle(1.0)));
  out.push_back(classify_soul(SoulDescriptor::singular_circle(1.0, kPi / 2.0)));
  out.push_back(classify_soul(SoulDescriptor::silvered_interval(1.0)));
  out.push_back(classify_soul(SoulDescriptor::torus(1.0)));
  out.push_back(classify_soul(SoulDescriptor::sphere_with_cones(
      {kPi, 2.0 * kPi / 3.0, kPi / 3.0}, 1.0)));
  out.push_back(classify_soul(
      SoulDescriptor::sphere_with_cones({kPi, kPi, kPi, kPi}, 1.0)));
  out.push_back(classify_soul(SoulDescriptor::klein_bottle(1.0)));
  out.push_back(classify_soul(SoulDescriptor::projective_plane_two_cones(1.0)));
  out.push_back(classify_soul(SoulDescriptor::disk_two_cones_silvered(1.0)));
  out.push_back(classify_soul(SoulDescriptor::annulus_silvered(1.0)));
  out.push_back(classify_soul(SoulDescriptor::moebius_silvered(1.0)));
  return out;
}

}  // namespace conewerk
