#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace conewerk {

// Branching data: ramification indices m_1..m_q >= 2 with sign choices.
struct BranchingData {
  std::vector<int> m;
  std::vector<int> eps;  // +1 / -1, defaults to +1 per index

  BranchingData(std::vector<int> m, std::vector<int> eps = {});
  int q() const { return static_cast<int>(m.size()); }
};

// p_0 = 2, p_1 = x, p_n = x p_{n-1} - p_{n-2}, with exact integer
// coefficients (they exceed 64 bits well before n = 256).
class ChebLikePoly {
 public:
  explicit ChebLikePoly(int n);

  int degree() const { return n_; }
  // Decimal strings of the coefficients, constant term first.
  std::vector<std::string> coefficient_strings() const;
  // Derivative at x = 2, exact; equals n^2.
  std::string derivative_at_two() const;
  bool derivative_at_two_equals(std::uint64_t value) const;

  double evaluate(double x) const;                  // Horner on doubles
  std::complex<double> evaluate(std::complex<double> x) const;

 private:
  int n_;
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// Stable three-term recursion evaluation of p_n at x (Clenshaw-style);
// avoids the large coefficients entirely.
double cheb_like_eval(int n, double x);
std::complex<double> cheb_like_eval(int n, std::complex<double> x);
// Derivative p_n'(x) by the differentiated recursion.
double cheb_like_eval_derivative(int n, double x);

ChebLikePoly cheb_like(int n);

// Exact n^2 identity check value; throws on n < 0.
std::uint64_t cheb_derivative_at_two(int n);

struct TracePowerCheck {
  std::complex<double> lhs;  // trace(M^n)
  std::complex<double> rhs;  // p_n(trace M)
};

// trace(M^n) against p_n(trace M) for unimodular 2x2 M (row-major a,b,c,d).
TracePowerCheck trace_power_check(const std::complex<double>& a,
                                  const std::complex<double>& b,
                                  const std::complex<double>& c,
                                  const std::complex<double>& d, int n);

// Theta(w) = (eps_1 2cos(w pi/m_1), ..., eps_q 2cos(w pi/m_q)).
std::vector<std::complex<double>> theta_param(const BranchingData& data,
                                              std::complex<double> w);

// max_i | p_{m_1}(eps_1 z_1) - p_{m_i}(eps_i z_i) |; zero on the curve.
double curve_residual(const BranchingData& data,
                      const std::vector<std::complex<double>>& z);

// Singular values of the Jacobian of the defining equations at Theta(0);
// the numeric rank at threshold 1e-6 must be q-1 at a smooth point.
int smooth_point_rank(const BranchingData& data, double threshold = 1e-6);

// 2 cos(angle/2); +-2 only at the parabolic/trivial boundary.
double meridian_trace(double angle);

// Exact rational with 64-bit parts, kept reduced.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);
  double value() const { return static_cast<double>(num) / den; }
  bool is_integer() const { return den == 1; }
};

Rational operator*(const Rational& a, const Rational& b);
bool operator==(const Rational& a, const Rational& b);

// Generalized Dehn filling coefficient: infinity, an exact rational pair,
// or a floating pair (optionally declared to have irrational ratio).
struct DehnCoefficient {
  struct Infinity {};
  struct RationalPair {
    Rational p, q;
  };
  struct RealPair {
    double p = 0.0, q = 0.0;
    bool declared_irrational = false;
  };
  std::variant<Infinity, RationalPair, RealPair> value;

  static DehnCoefficient infinity();
  static DehnCoefficient rational(Rational p, Rational q);
  static DehnCoefficient real(double p, double q,
                              bool declared_irrational = false);
};

enum class FillingKind { Complete, ManifoldFilling, ConeFilling, DehnTypeSingular };

struct FillingClass {
  FillingKind kind = FillingKind::Complete;
  std::int64_t r = 0;  // surgery meridian r*mu + s*lambda (cone/manifold)
  std::int64_t s = 0;
  double cone_angle = 0.0;  // 2*pi*|r/p|, ConeFilling only
};

// Coefficient semantics: infinity -> Complete; coprime integers ->
// ManifoldFilling; rational ratio p/q = r/s in lowest terms ->
// ConeFilling with angle 2*pi*|r/p|; irrational ratio -> DehnTypeSingular.
// (0,0) is rejected.  Floating pairs are resolved by a continued-fraction
// heuristic with cutoff 1e-12 unless declared irrational.
FillingClass classify_filling(const DehnCoefficient& c);

// Coefficients (n_i/t, 0); t = 0 maps to infinity.  classify_filling of
// entry i yields cone angle (2*pi/n_i)*t.
std::vector<DehnCoefficient> angle_schedule(const std::vector<int>& n_indices,
                                            const Rational& t);

}  // namespace conewerk
