#pragma once

#include <Eigen/Dense>
#include <string>

namespace conewerk {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

// Minkowski form J = diag(-1,1,1,1) pairing on R^4.
double minkowski_dot(const Vec4& u, const Vec4& v);

// Hyperboloid sheet {<y,y> = -1, y0 > 0} and its Klein (projective) chart.
Vec4 hyperboloid_from_klein(const Vec3& u);
Vec3 klein_from_hyperboloid(const Vec4& y);
double hyperbolic_distance(const Vec4& p, const Vec4& q);
// Distance between Klein chart points (curvature -1).
double klein_distance(const Vec3& u, const Vec3& v);

// Rigid motion of E^3 or a Lorentz transform of H^3 (hyperboloid model).
class Isometry {
 public:
  enum class Kind { Euclidean, Lorentz };

  static Isometry identity(Kind kind);
  static Isometry euclidean(const Mat3& rotation, const Vec3& translation);
  static Isometry translation(const Vec3& v);
  static Isometry rotation(const Vec3& axis_unit, double angle);
  // Rotation about the given axis direction composed with translation
  // `length` along it.
  static Isometry screw(const Vec3& axis_unit, double length, double angle);
  static Isometry lorentz(const Mat4& matrix);
  // Hyperbolic translation of the given length along a spatial direction.
  static Isometry boost(const Vec3& direction_unit, double rapidity);
  // Rotation of H^3 about the coordinate geodesic through the origin with
  // tangent e_z.
  static Isometry lorentz_rotation_z(double angle);
  // Lorentz translation moving the origin of the Klein chart to u (|u|<1).
  static Isometry lorentz_translation_to(const Vec3& u_klein);

  Kind kind() const { return kind_; }
  const Mat3& rot() const { return rot_; }
  const Vec3& trans() const { return trans_; }
  const Mat4& lorentz_matrix() const { return lorentz_; }

  // Max deviation from the defining relation (R^T R = I resp. G^T J G = J).
  double form_error() const;
  bool preserves_sheet() const;
  bool is_valid(double tol = 1e-10) const;

  Isometry compose(const Isometry& other) const;  // this after other
  Isometry inverse() const;

  Vec3 apply(const Vec3& x) const;  // Euclidean point
  Vec4 apply(const Vec4& y) const;  // hyperboloid point
  // Action in the working chart (Euclidean coords resp. Klein coords).
  Vec3 apply_chart(const Vec3& u) const;

  bool approx_equal(const Isometry& other, double tol = 1e-8) const;
  bool is_identity(double tol = 1e-8) const;

 private:
  explicit Isometry(Kind kind);

  Kind kind_;
  Mat3 rot_ = Mat3::Identity();
  Vec3 trans_ = Vec3::Zero();
  Mat4 lorentz_ = Mat4::Identity();
};

// Distance between chart points under the given kind.
double chart_distance(Isometry::Kind kind, const Vec3& a, const Vec3& b);

}  // namespace conewerk
