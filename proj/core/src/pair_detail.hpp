#pragma once

#include "vdwx/atom.hpp"

namespace vdwx::detail {

// R-independent coefficients of the near-zone closed form, so that
// shift = sigma * shift_coeff / R^6 and half_width = width_coeff / R^6.
// sigma carries the probe-state sign; shift_coeff and width_coeff are the
// unsigned magnitudes times the resonance denominators. Keeping sigma as a
// separate factor makes the state antisymmetries exact in floating point.
struct ClosedPairCoeffs {
  double sigma = 1.0;        // +1 excited probe, -1 ground probe
  double x = 0.0;            // detuning (opposite states) or frequency sum
  double shift_over_r6 = 0;  // sigma * c * x / (x^2 + (gb/2)^2)
  double width_over_r6 = 0;  // c * (gb/2) / (x^2 + (gb/2)^2)
  bool degenerate = false;   // x == 0 at zero width: no closed-form value
};

inline ClosedPairCoeffs closed_pair_coeffs(const TwoLevelAtom& a, AtomState sa,
                                           const TwoLevelAtom& b,
                                           AtomState sb) {
  ClosedPairCoeffs out;
  out.sigma = sa == AtomState::excited ? 1.0 : -1.0;
  out.x = sa == sb ? a.omega() + b.omega() : a.omega() - b.omega();
  const double g2 = 0.5 * b.gamma();
  const double den = out.x * out.x + g2 * g2;
  if (den == 0.0) {
    out.degenerate = true;
    return out;
  }
  const double c = 2.0 * a.d2() * b.d2() / 3.0;
  out.shift_over_r6 = out.sigma * (c * out.x / den);
  out.width_over_r6 = c * g2 / den;
  return out;
}

}  // namespace vdwx::detail
