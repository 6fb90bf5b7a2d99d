#pragma once

#include <string>
#include <vector>

#include "vdwx/pair.hpp"

namespace vdwx {

// Independent brute-force checks used to pin the derived constants the rest
// of the library freezes. These recompute geometry factors and closed forms
// from integrals that share no code path with the closed expressions.

// Pairwise 1/r^6 sum over a half space at distance z0, computed as a nested
// adaptive cylindrical integral with analytic tails. Converges to
// pi / (6 z0^3).
double halfspace_factor_cubature(double z0, double tol = 1e-8);

// Integral of 1/z^3 over [L, infinity) via quadrature plus analytic tail;
// equals 1 / (2 L^2). The slab-on-slab reduction uses it twice.
double slab_factor(double L, double tol = 1e-10);

struct PairAgreement {
  ShiftWidth closed;
  ShiftWidth quadrature;
  double rel_gap = 0.0;  // |W_quad - W_closed| / |W_closed|
};

// Runs the near-zone quadrature against the closed form for one
// configuration and reports the relative gap on the complex level shift.
PairAgreement verify_pair_closed(const PairConfiguration& pc, double R,
                                 const QuadratureOptions& opts = {});

struct ProvenanceCheck {
  std::string name;
  double computed = 0.0;
  double reference = 0.0;
  double rel_gap = 0.0;
  double tol = 0.0;
  bool pass = false;
};

// Recomputes every frozen constant the tests assert and compares against the
// stored references. Runs fast enough to gate the rest of the suite.
std::vector<ProvenanceCheck> provenance_checks();

}  // namespace vdwx
