#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace conewerk {

// Base 2-orbifold carrying the cone points of an orbifold Euler
// characteristic computation.
enum class OrbifoldBase { Sphere, DiskSilvered, Torus, Klein };

// chi_orb: sphere 2 - sum(1 - a_i/2pi); silvered disk 1 - sum(1 - a_i/2pi);
// torus and Klein bottle 0 - sum(1 - a_i/2pi).  Angles restricted to (0, pi].
double orbifold_euler(const std::vector<double>& angles, OrbifoldBase base);

// The integer triples with 1/p1 + 1/p2 + 1/p3 = 1, sorted ascending:
// exactly {(2,3,6), (2,4,4), (3,3,3)}.
std::vector<std::array<int, 3>> euclidean_triples();

enum class SoulKind {
  Point,
  SingularPoint,      // cone angle alpha
  Circle,             // length L, fiber nonsingular or singular(alpha)
  SilveredInterval,   // length L
  Torus,              // area A
  SphereWithCones,    // angles (3 summing to 2pi, or pi,pi,pi,pi), area A
  KleinBottle,        // area A
  ProjectivePlaneTwoCones,  // P^2(pi,pi), area A
  DiskTwoConesSilvered,     // D^2(pi,pi) silvered boundary, area A
  AnnulusSilvered,          // area A
  MoebiusSilvered,          // area A
};

struct SoulDescriptor {
  SoulKind kind = SoulKind::Point;
  double cone_angle = 0.0;          // SingularPoint / singular Circle fiber
  bool circle_fiber_singular = false;
  double length = 0.0;              // dim-1 souls
  double area = 0.0;                // dim-2 souls
  std::vector<double> angles;       // SphereWithCones

  int dim() const;

  static SoulDescriptor point();
  static SoulDescriptor singular_point(double alpha);
  static SoulDescriptor circle(double length);
  static SoulDescriptor singular_circle(double length, double alpha);
  static SoulDescriptor silvered_interval(double length);
  static SoulDescriptor torus(double area);
  static SoulDescriptor sphere_with_cones(std::vector<double> angles,
                                          double area);
  static SoulDescriptor klein_bottle(double area);
  static SoulDescriptor projective_plane_two_cones(double area);
  static SoulDescriptor disk_two_cones_silvered(double area);
  static SoulDescriptor annulus_silvered(double area);
  static SoulDescriptor moebius_silvered(double area);
};

enum class LocalModelName {
  R3,
  R3_alpha,
  S1_twist_R2,
  S1_twist_ConeDisk,
  Pillow,
  T2xR,
  S2abc_xR,
  S2_4pi_xR,
  K2_twist_R,
  P2pipi_twist_R,
  Quot_S2_4pi_D2pipi,
  Quot_T2_annulus,
  Quot_K2_moebius,
};

std::string to_string(LocalModelName name);

struct LocalModel {
  LocalModelName name;
  SoulDescriptor soul;
  // Quotient models carry their double cover plus an involution tag.
  std::optional<LocalModelName> double_cover;
};

// Soul -> model of the non-compact Euclidean catalogue.  Rejects
// non-Euclidean souls (orbifold Euler != 0 on sphere bases) and cone
// angles outside (0, pi].
LocalModel classify_soul(const SoulDescriptor& soul);

// For dim-1 souls the double cover doubles the length (interval -> circle);
// dim-2 quotients double the area.
LocalModel double_cover_model(const LocalModel& m);

enum class MargulisType { A, B, C, Excluded };

// A: T2xR, S1 x~ E2, S1 x~ cone disk.  B: S2(a,b,c)xR, S2(pi^4)xR, pillow.
// C: P2(pi,pi) x~ R and the D2(pi,pi) quotient.  The Klein-bottle bundle
// and the annulus/Moebius quotients are excluded (atoroidality).
MargulisType margulis_type(LocalModelName name);

std::string to_string(MargulisType t);

// Exact Euclidean volume of the radius-nu normal cone bundle of the soul:
// point souls give (alpha/2pi)(4/3)pi nu^3, circle souls L*(alpha/2pi)*pi*nu^2
// (fiber angle 2pi when nonsingular), silvered intervals L*pi*nu^2 via the
// double cover, dim-2 souls 2*A*nu.
double tube_volume(const LocalModel& m, double nu);

// The whole catalogue, one representative per model, with unit metric data.
std::vector<LocalModel> local_model_catalogue();

}  // namespace conewerk
