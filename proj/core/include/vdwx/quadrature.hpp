#pragma once

#include <complex>
#include <functional>
#include <span>

#include "vdwx/errors.hpp"

namespace vdwx {

struct QuadratureReport {
  std::complex<double> value{0.0, 0.0};
  double abs_error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

struct QuadratureOptions {
  // Accept once the summed local error estimates fall below
  // tol * max(1, |value|).
  double tol = 1e-9;
  // Hard ceiling on the number of live intervals. Hitting it yields a
  // non-converged report, not an exception; callers decide.
  int max_intervals = 20000;
};

// Globally adaptive Gauss-Kronrod 7/15 rule on [a, b].
//
// Deterministic: refinement always splits the interval with the largest
// local error estimate, ties broken by the left endpoint, so identical
// inputs produce bitwise identical reports. `seeds` are interior abscissae
// at which the initial partition is split (sharp features the integrand is
// known to have); values outside (a, b) are ignored.
//
// Throws NonFiniteIntegrand if f returns NaN or Inf.
QuadratureReport integrate_adaptive(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    std::span<const double> seeds = {}, const QuadratureOptions& opts = {});

}  // namespace vdwx
