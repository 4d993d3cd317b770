#include "conewerk/trace_deformation.hpp"

#include <gmpxx.h>

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <array>
#include <cmath>
#include <memory>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace conewerk {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

BranchingData::BranchingData(std::vector<int> m_, std::vector<int> eps_)
    : m(std::move(m_)), eps(std::move(eps_)) {
  if (m.empty()) throw std::invalid_argument("branching data needs q >= 1");
  for (int mi : m)
    if (mi < 2) throw std::invalid_argument("ramification indices must be >= 2");
  if (eps.empty()) eps.assign(m.size(), 1);
  if (eps.size() != m.size())
    throw std::invalid_argument("eps and m must have equal length");
  for (int e : eps)
    if (e != 1 && e != -1) throw std::invalid_argument("signs must be +-1");
}

struct ChebLikePoly::Impl {
  std::vector<mpz_class> coeffs;  // constant term first
};

namespace {

std::vector<mpz_class> cheb_coeffs(int n) {
  std::vector<mpz_class> p0{2};     // p_0
  std::vector<mpz_class> p1{0, 1};  // p_1
  if (n == 0) return p0;
  if (n == 1) return p1;
  for (int k = 2; k <= n; ++k) {
    std::vector<mpz_class> next(k + 1, mpz_class(0));
    for (std::size_t i = 0; i < p1.size(); ++i) next[i + 1] = p1[i];
    for (std::size_t i = 0; i < p0.size(); ++i) next[i] -= p0[i];
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return p1;
}

}  // namespace

ChebLikePoly::ChebLikePoly(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("degree must be >= 0");
  auto impl = std::make_shared<Impl>();
  impl->coeffs = cheb_coeffs(n);
  impl_ = std::move(impl);
}

std::vector<std::string> ChebLikePoly::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(impl_->coeffs.size());
  for (const auto& c : impl_->coeffs) out.push_back(c.get_str());
  return out;
}

std::string ChebLikePoly::derivative_at_two() const {
  mpz_class acc = 0;
  mpz_class pow2 = 1;  // 2^{k-1}
  for (std::size_t k = 1; k < impl_->coeffs.size(); ++k) {
    acc += mpz_class(static_cast<long>(k)) * impl_->coeffs[k] * pow2;
    pow2 *= 2;
  }
  return acc.get_str();
}

bool ChebLikePoly::derivative_at_two_equals(std::uint64_t value) const {
  mpz_class expected;
  mpz_import(expected.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
  return derivative_at_two() == expected.get_str();
}

double ChebLikePoly::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = impl_->coeffs.rbegin(); it != impl_->coeffs.rend(); ++it)
    acc = acc * x + it->get_d();
  return acc;
}

std::complex<double> ChebLikePoly::evaluate(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = impl_->coeffs.rbegin(); it != impl_->coeffs.rend(); ++it)
    acc = acc * x + it->get_d();
  return acc;
}

ChebLikePoly cheb_like(int n) { return ChebLikePoly(n); }

std::uint64_t cheb_derivative_at_two(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  ChebLikePoly p(n);
  const std::uint64_t expected =
      static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  if (!p.derivative_at_two_equals(expected))
    throw std::logic_error("derivative identity failed for n = " +
                           std::to_string(n));
  return expected;
}

double cheb_like_eval(int n, double x) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  double p0 = 2.0, p1 = x;
  if (n == 0) return p0;
  for (int k = 2; k <= n; ++k) {
    double p2 = x * p1 - p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

std::complex<double> cheb_like_eval(int n, std::complex<double> x) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  std::complex<double> p0 = 2.0, p1 = x;
  if (n == 0) return p0;
  for (int k = 2; k <= n; ++k) {
    std::complex<double> p2 = x * p1 - p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double cheb_like_eval_derivative(int n, double x) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  double p0 = 2.0, p1 = x;
  double d0 = 0.0, d1 = 1.0;
  if (n == 0) return 0.0;
  for (int k = 2; k <= n; ++k) {
    double p2 = x * p1 - p0;
    double d2 = p1 + x * d1 - d0;
    p0 = p1;
    p1 = p2;
    d0 = d1;
    d1 = d2;
  }
  return d1;
}

TracePowerCheck trace_power_check(const std::complex<double>& a,
                                  const std::complex<double>& b,
                                  const std::complex<double>& c,
                                  const std::complex<double>& d, int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const std::complex<double> det = a * d - b * c;
  if (std::abs(det - 1.0) >= 1e-9)
    throw std::invalid_argument("matrix must be unimodular (det 1)");
  std::array<std::complex<double>, 4> acc{1.0, 0.0, 0.0, 1.0};
  std::array<std::complex<double>, 4> m{a, b, c, d};
  for (int i = 0; i < n; ++i) {
    std::array<std::complex<double>, 4> next;
    next[0] = acc[0] * m[0] + acc[1] * m[2];
    next[1] = acc[0] * m[1] + acc[1] * m[3];
    next[2] = acc[2] * m[0] + acc[3] * m[2];
    next[3] = acc[2] * m[1] + acc[3] * m[3];
    acc = next;
  }
  return TracePowerCheck{acc[0] + acc[3], cheb_like_eval(n, a + d)};
}

std::vector<std::complex<double>> theta_param(const BranchingData& data,
                                              std::complex<double> w) {
  std::vector<std::complex<double>> out(data.m.size());
  for (std::size_t i = 0; i < data.m.size(); ++i)
    out[i] = double(data.eps[i]) * 2.0 * std::cos(w * kPi / double(data.m[i]));
  return out;
}

double curve_residual(const BranchingData& data,
                      const std::vector<std::complex<double>>& z) {
  if (z.size() != data.m.size())
    throw std::invalid_argument("z must have length q");
  const std::complex<double> first =
      cheb_like_eval(data.m[0], double(data.eps[0]) * z[0]);
  double res = 0.0;
  for (std::size_t i = 1; i < z.size(); ++i) {
    const std::complex<double> zi =
        cheb_like_eval(data.m[i], double(data.eps[i]) * z[i]);
    // Scale-relative: the common value grows like exp(q*|Im w|*pi) on the
    // curve, far past the absolute resolution of doubles.
    const double scale = std::max({1.0, std::abs(first), std::abs(zi)});
    res = std::max(res, std::abs(first - zi) / scale);
  }
  return res;
}

int smooth_point_rank(const BranchingData& data, double threshold) {
  const int q = data.q();
  if (q == 1) return 0;
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(q - 1, q);
  for (int i = 0; i < q - 1; ++i) {
    jac(i, 0) = data.eps[0] * cheb_like_eval_derivative(data.m[0], 2.0);
    jac(i, i + 1) =
        -data.eps[i + 1] * cheb_like_eval_derivative(data.m[i + 1], 2.0);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > threshold) ++rank;
  return rank;
}

double meridian_trace(double angle) {
  if (!(angle >= 0.0 && angle < kTwoPi))
    throw std::domain_error("angle must lie in [0, 2*pi)");
  return 2.0 * std::cos(angle / 2.0);
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num * b.num, a.den * b.den);
}

bool operator==(const Rational& a, const Rational& b) {
  return a.num == b.num && a.den == b.den;
}

DehnCoefficient DehnCoefficient::infinity() {
  DehnCoefficient c;
  c.value = Infinity{};
  return c;
}

DehnCoefficient DehnCoefficient::rational(Rational p, Rational q) {
  if (p.num == 0 && q.num == 0)
    throw std::invalid_argument("(0,0) is not a Dehn coefficient");
  DehnCoefficient c;
  c.value = RationalPair{p, q};
  return c;
}

DehnCoefficient DehnCoefficient::real(double p, double q,
                                      bool declared_irrational) {
  if (p == 0.0 && q == 0.0)
    throw std::invalid_argument("(0,0) is not a Dehn coefficient");
  DehnCoefficient c;
  c.value = RealPair{p, q, declared_irrational};
  return c;
}

namespace {

// Continued-fraction rational detection, heuristic for floating inputs:
// rational iff some convergent with denominator <= 1e4 lands within
// 1e-12 * scale.  Without the denominator cap every real would
// eventually qualify.
bool detect_rational(double x, std::int64_t& num, std::int64_t& den) {
  const double scale = std::max(1.0, std::abs(x));
  std::int64_t h0 = 1, h1 = static_cast<std::int64_t>(std::floor(x));
  std::int64_t k0 = 0, k1 = 1;
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64 && k1 <= 10000; ++iter) {
    if (std::abs(x - double(h1) / double(k1)) < 1e-12 * scale) {
      num = h1;
      den = k1;
      return true;
    }
    if (frac < 1e-15) break;
    const double inv = 1.0 / frac;
    const double a = std::floor(inv);
    if (a > 1e12) break;
    frac = inv - a;
    const std::int64_t ai = static_cast<std::int64_t>(a);
    const std::int64_t h2 = ai * h1 + h0;
    const std::int64_t k2 = ai * k1 + k0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
  }
  return false;
}

FillingClass classify_rational_pair(const Rational& p, const Rational& q) {
  FillingClass out;
  if (p.is_integer() && q.is_integer()) {
    const std::int64_t pa = p.num < 0 ? -p.num : p.num;
    const std::int64_t qa = q.num < 0 ? -q.num : q.num;
    if (std::gcd(pa, qa) == 1) {
      out.kind = FillingKind::ManifoldFilling;
      out.r = p.num;
      out.s = q.num;
      return out;
    }
  }
  // p/q = r/s in lowest terms; q = 0 gives (r,s) = (1,0).
  std::int64_t r, s;
  if (q.num == 0) {
    r = 1;
    s = 0;
  } else {
    const Rational ratio(p.num * q.den, p.den * q.num);
    r = ratio.num;
    s = ratio.den;
    if (r < 0) {  // normalize the meridian representative
      r = -r;
      s = -s;
    }
  }
  out.kind = FillingKind::ConeFilling;
  out.r = r;
  out.s = s;
  const double p_val = p.value();
  out.cone_angle = kTwoPi * std::abs(double(r) / p_val);
  return out;
}

}  // namespace

FillingClass classify_filling(const DehnCoefficient& c) {
  FillingClass out;
  if (std::holds_alternative<DehnCoefficient::Infinity>(c.value)) {
    out.kind = FillingKind::Complete;
    return out;
  }
  if (const auto* rp = std::get_if<DehnCoefficient::RationalPair>(&c.value))
    return classify_rational_pair(rp->p, rp->q);

  const auto& real = std::get<DehnCoefficient::RealPair>(c.value);
  if (real.declared_irrational) {
    out.kind = FillingKind::DehnTypeSingular;
    return out;
  }
  std::int64_t pn, pd, qn, qd;
  if (detect_rational(real.p, pn, pd) && detect_rational(real.q, qn, qd))
    return classify_rational_pair(Rational(pn, pd), Rational(qn, qd));
  out.kind = FillingKind::DehnTypeSingular;
  return out;
}

std::vector<DehnCoefficient> angle_schedule(const std::vector<int>& n_indices,
                                            const Rational& t) {
  const double tv = t.value();
  if (!(tv >= 0.0 && tv <= 1.0))
    throw std::invalid_argument("t must lie in [0, 1]");
  std::vector<DehnCoefficient> out;
  out.reserve(n_indices.size());
  for (int n : n_indices) {
    if (n < 1) throw std::invalid_argument("indices must be >= 1");
    if (t.num == 0) {
      out.push_back(DehnCoefficient::infinity());
    } else {
      out.push_back(DehnCoefficient::rational(
          Rational(std::int64_t{n} * t.den, t.num), Rational(0, 1)));
    }
  }
  return out;
}

}  // namespace conewerk
