#include "vdwx/response.hpp"

#include <cmath>
#include <numbers>

namespace vdwx {

namespace {

constexpr double four_pi = 4.0 * std::numbers::pi;

double state_sign(AtomState s) {
  return s == AtomState::ground ? 1.0 : -1.0;
}

}  // namespace

std::pair<Complex, Complex> polarizability_fractions(const TwoLevelAtom& atom,
                                                     AtomState state,
                                                     ResponseKind kind,
                                                     double omega) {
  const double s = state_sign(state);
  const double w0 = s * atom.omega();
  const double hg = 0.5 * atom.gamma();
  const double third = atom.d2() / 3.0;

  // First denominator is common to both kinds; the kinds differ only in the
  // sign of the width term of the second one. The coherent choice makes the
  // response an even function of omega.
  const Complex d1(w0 - omega, -hg);
  const Complex d2 = kind == ResponseKind::coherent ? Complex(w0 + omega, -hg)
                                                    : Complex(w0 + omega, hg);
  if (atom.gamma() == 0.0 && (d1 == Complex(0.0, 0.0) || d2 == Complex(0.0, 0.0))) {
    throw PoleOnAxis(omega);
  }
  return {third / d1, third / d2};
}

Complex polarizability(const TwoLevelAtom& atom, AtomState state,
                       ResponseKind kind, double omega) {
  auto [f1, f2] = polarizability_fractions(atom, state, kind, omega);
  return f1 + f2;
}

Complex permittivity(const MediumState& medium, ResponseKind kind,
                     double omega) {
  const auto& sp = medium.species();
  Complex chi(0.0, 0.0);
  if (medium.n_g() > 0.0) {
    chi += medium.n_g() * polarizability(sp, AtomState::ground, kind, omega);
  }
  if (medium.n_e() > 0.0) {
    chi += medium.n_e() * polarizability(sp, AtomState::excited, kind, omega);
  }
  return 1.0 + four_pi * chi;
}

double permittivity_imag_axis(const MediumState& medium, ResponseKind kind,
                              double u) {
  if (kind != ResponseKind::conventional) throw CoherentOnImaginaryAxis();
  if (!(u >= 0.0)) {
    throw ValidationError(ValidationError::Code::non_positive_frequency,
                          "imaginary frequency must be >= 0");
  }
  const auto& sp = medium.species();
  const double b = u + 0.5 * sp.gamma();
  // alpha(iu) = (d2/3) 2 s w0 / (w0^2 + (u + gamma/2)^2), real for both
  // populations; excited contributions enter with the opposite sign.
  const double common =
      (sp.d2() / 3.0) * 2.0 * sp.omega() / (sp.omega() * sp.omega() + b * b);
  return 1.0 + four_pi * (medium.n_g() - medium.n_e()) * common;
}

}  // namespace vdwx
