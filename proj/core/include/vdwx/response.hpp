#pragma once

#include <complex>
#include <utility>

#include "vdwx/atom.hpp"

namespace vdwx {

// Which analytic structure the linear response carries.
//
// Both kinds share the first partial fraction. They differ in the sign of the
// i*gamma/2 term of the second one: the coherent kind is even in omega (both
// poles in the lower half plane for a ground-state atom), the conventional
// kind obeys alpha(-omega) = conj(alpha(omega)) and is real on the positive
// imaginary axis.
enum class ResponseKind { coherent, conventional };

using Complex = std::complex<double>;

// The two partial fractions of the orientation-averaged polarizability,
// each d2/3 over a linear denominator. Exposed separately so exact
// cancellation properties can be tested term by term.
std::pair<Complex, Complex> polarizability_fractions(const TwoLevelAtom& atom,
                                                     AtomState state,
                                                     ResponseKind kind,
                                                     double omega);

// Orientation-averaged scalar polarizability alpha(omega) on the real axis.
// Throws PoleOnAxis when gamma == 0 and |omega| hits the transition frequency.
Complex polarizability(const TwoLevelAtom& atom, AtomState state,
                       ResponseKind kind, double omega);

// Dilute-gas permittivity eps(omega) = 1 + 4 pi (n_e alpha_e + n_g alpha_g).
Complex permittivity(const MediumState& medium, ResponseKind kind,
                     double omega);

// eps(i u) on the positive imaginary axis, u >= 0. Real by construction.
// Only the conventional kind rotates there; the coherent kind throws
// CoherentOnImaginaryAxis.
double permittivity_imag_axis(const MediumState& medium, ResponseKind kind,
                              double u);

}  // namespace vdwx
