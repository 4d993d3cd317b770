#pragma once

#include <functional>

namespace conewerk {

// Adaptive Gauss-Legendre integration of f over [a,b] to absolute
// tolerance abs_tol.  Panels are bisected until the order-n estimate
// agrees with the sum of the two half-panel estimates.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol = 1e-10);

}  // namespace conewerk
