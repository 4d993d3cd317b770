#pragma once

#include <cstdint>

namespace conewerk {

// The explicit constants of the covering pipeline, each reproducing its
// defining formula:
//   a     two-sided cubic comparison constant for V_{-1} on (0, end]
//   N     ceil sup_{r in (0,1]} V_{-1}(8r)/V_{-1}(r/4)
//   xi_k  16 sqrt(2(k+1))/3
//   eta0  half of Vol(simplex^3) / ((N+1)(4 xi_3/3)^3)
//   b0    2^15 pi a^2          b1 = 2^36 pi a^2 = 2^21 b0
//   D0    max(b0/eta0, 300)    D1 = max(b1/eta0, 1e4)
struct ConstantsLedger {
  double a = 0.0;
  double a_interval_end = 8.0;
  long long N = 0;
  double eta0 = 0.0;
  double b0 = 0.0;
  double b1 = 0.0;
  double D0 = 0.0;
  double D1 = 0.0;

  double xi(int k) const;
  // (c1 / (2^12 a^2 xi_k^3))^(1/(k-3)), simplex gap constant for k > 3;
  // c1 is the caller-supplied dimensional constant.
  double epsilon_k(int k, double c1) const;
};

ConstantsLedger constants(double a_interval_end = 8.0);

// Standalone nerve dimension bound (same N as the ledger).
long long nerve_dimension_bound();

// Volume of a regular simplex of dimension k embedded with unit basis
// vertices (edge length sqrt(2)).
double standard_simplex_volume(int k);

enum class MargulisCase { AnchorB, AbelianFar, AbelianNear };

// Guaranteed lower bounds for the covering radius at a Margulis
// neighborhood: nu/16 at the anchor, nu/128 for an abelian model away
// from the anchor, min(nu/2^4, nu0/2^10) nearby (which is nu/2^11 at the
// worst-case anchor radius nu0 = nu/2).  The near case needs D > 1e4.
double margulis_radius_floor(double nu, MargulisCase c, double nu0 = 0.0,
                             double D = 0.0);

}  // namespace conewerk
