#pragma once

#include <cstddef>
#include <functional>

namespace centropy::quad {

struct Tolerance {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  std::size_t max_evaluations = 1'000'000;
};

struct IntegralResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

// Adaptive Gauss-Kronrod 7/15 integration of f over (lower, upper).
// Either endpoint may be infinite; infinite ends are folded onto (0, 1)
// with x = a + t/(1-t), so f is only ever evaluated at interior points.
// A non-finite value of f raises DomainError naming the abscissa.
// Budget exhaustion is not an error: the best estimate is returned with
// converged == false.
IntegralResult integrate(const std::function<double(double)>& f, double lower,
                         double upper, const Tolerance& tol = {});

// u * log(u) extended continuously by 0 at u == 0 and u == 1. Arguments may
// stray outside [0, 1] by at most 1e-12 (they are clamped); anything further
// out raises DomainError.
double xlogx(double u);

}  // namespace centropy::quad
