#include "conewerk/isometry.hpp"

#include <cmath>
#include <stdexcept>

namespace conewerk {

namespace {
const Mat4 kJ = (Mat4() << -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1)
                    .finished();
}

double minkowski_dot(const Vec4& u, const Vec4& v) {
  return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

Vec4 hyperboloid_from_klein(const Vec3& u) {
  const double n2 = u.squaredNorm();
  if (!(n2 < 1.0))
    throw std::domain_error("Klein point must lie in the open unit ball");
  const double lambda = 1.0 / std::sqrt(1.0 - n2);
  return Vec4(lambda, lambda * u[0], lambda * u[1], lambda * u[2]);
}

Vec3 klein_from_hyperboloid(const Vec4& y) {
  return Vec3(y[1] / y[0], y[2] / y[0], y[3] / y[0]);
}

double hyperbolic_distance(const Vec4& p, const Vec4& q) {
  const double c = -minkowski_dot(p, q);
  return std::acosh(std::max(1.0, c));
}

double klein_distance(const Vec3& u, const Vec3& v) {
  return hyperbolic_distance(hyperboloid_from_klein(u),
                             hyperboloid_from_klein(v));
}

Isometry::Isometry(Kind kind) : kind_(kind) {}

Isometry Isometry::identity(Kind kind) { return Isometry(kind); }

Isometry Isometry::euclidean(const Mat3& rotation, const Vec3& translation) {
  Isometry g(Kind::Euclidean);
  g.rot_ = rotation;
  g.trans_ = translation;
  return g;
}

Isometry Isometry::translation(const Vec3& v) {
  return euclidean(Mat3::Identity(), v);
}

Isometry Isometry::rotation(const Vec3& axis_unit, double angle) {
  return euclidean(Eigen::AngleAxisd(angle, axis_unit).toRotationMatrix(),
                   Vec3::Zero());
}

Isometry Isometry::screw(const Vec3& axis_unit, double length, double angle) {
  return euclidean(Eigen::AngleAxisd(angle, axis_unit).toRotationMatrix(),
                   length * axis_unit);
}

Isometry Isometry::lorentz(const Mat4& matrix) {
  Isometry g(Kind::Lorentz);
  g.lorentz_ = matrix;
  if (!g.is_valid(1e-8))
    throw std::invalid_argument("matrix does not preserve the Minkowski form");
  return g;
}

Isometry Isometry::boost(const Vec3& direction_unit, double rapidity) {
  const Vec3 d = direction_unit.normalized();
  Mat4 m = Mat4::Identity();
  const double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
  m(0, 0) = ch;
  for (int i = 0; i < 3; ++i) {
    m(0, i + 1) = sh * d[i];
    m(i + 1, 0) = sh * d[i];
    for (int j = 0; j < 3; ++j)
      m(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + (ch - 1.0) * d[i] * d[j];
  }
  Isometry g(Kind::Lorentz);
  g.lorentz_ = m;
  return g;
}

Isometry Isometry::lorentz_rotation_z(double angle) {
  Mat4 m = Mat4::Identity();
  const double c = std::cos(angle), s = std::sin(angle);
  m(1, 1) = c;
  m(1, 2) = -s;
  m(2, 1) = s;
  m(2, 2) = c;
  Isometry g(Kind::Lorentz);
  g.lorentz_ = m;
  return g;
}

Isometry Isometry::lorentz_translation_to(const Vec3& u_klein) {
  const double n = u_klein.norm();
  if (n < 1e-300) return identity(Kind::Lorentz);
  return boost(u_klein / n, std::atanh(n));
}

double Isometry::form_error() const {
  if (kind_ == Kind::Euclidean)
    return (rot_.transpose() * rot_ - Mat3::Identity())
        .cwiseAbs()
        .maxCoeff();
  return (lorentz_.transpose() * kJ * lorentz_ - kJ).cwiseAbs().maxCoeff();
}

bool Isometry::preserves_sheet() const {
  if (kind_ == Kind::Euclidean) return true;
  return lorentz_(0, 0) > 0.0;
}

bool Isometry::is_valid(double tol) const {
  return form_error() <= tol && preserves_sheet();
}

Isometry Isometry::compose(const Isometry& other) const {
  if (kind_ != other.kind_)
    throw std::invalid_argument("cannot compose isometries of mixed kinds");
  Isometry g(kind_);
  if (kind_ == Kind::Euclidean) {
    g.rot_ = rot_ * other.rot_;
    g.trans_ = rot_ * other.trans_ + trans_;
  } else {
    g.lorentz_ = lorentz_ * other.lorentz_;
  }
  return g;
}

Isometry Isometry::inverse() const {
  Isometry g(kind_);
  if (kind_ == Kind::Euclidean) {
    g.rot_ = rot_.transpose();
    g.trans_ = -(rot_.transpose() * trans_);
  } else {
    g.lorentz_ = kJ * lorentz_.transpose() * kJ;
  }
  return g;
}

Vec3 Isometry::apply(const Vec3& x) const {
  if (kind_ != Kind::Euclidean)
    throw std::invalid_argument("Lorentz isometry applied to a 3-point");
  return rot_ * x + trans_;
}

Vec4 Isometry::apply(const Vec4& y) const {
  if (kind_ != Kind::Lorentz)
    throw std::invalid_argument("Euclidean isometry applied to a 4-point");
  return lorentz_ * y;
}

Vec3 Isometry::apply_chart(const Vec3& u) const {
  if (kind_ == Kind::Euclidean) return apply(u);
  // Projective action on the Klein chart; also defined outside the unit
  // ball (needed for truncation-box corners).
  const Vec4 y = lorentz_ * Vec4(1.0, u[0], u[1], u[2]);
  return Vec3(y[1] / y[0], y[2] / y[0], y[3] / y[0]);
}

bool Isometry::approx_equal(const Isometry& other, double tol) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::Euclidean)
    return (rot_ - other.rot_).cwiseAbs().maxCoeff() <= tol &&
           (trans_ - other.trans_).cwiseAbs().maxCoeff() <= tol;
  return (lorentz_ - other.lorentz_).cwiseAbs().maxCoeff() <= tol;
}

bool Isometry::is_identity(double tol) const {
  return approx_equal(identity(kind_), tol);
}

double chart_distance(Isometry::Kind kind, const Vec3& a, const Vec3& b) {
  if (kind == Isometry::Kind::Euclidean) return (a - b).norm();
  return klein_distance(a, b);
}

}  // namespace conewerk
