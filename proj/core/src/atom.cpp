#include "vdwx/atom.hpp"

#include <cmath>

namespace vdwx {

namespace {

void check_atom(double omega, double gamma, double d2) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw ValidationError(ValidationError::Code::non_positive_frequency,
                          "omega must be > 0");
  }
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw ValidationError(ValidationError::Code::negative_width,
                          "gamma must be >= 0");
  }
  if (!(d2 > 0.0) || !std::isfinite(d2)) {
    throw ValidationError(ValidationError::Code::non_positive_dipole,
                          "d2 must be > 0");
  }
}

}  // namespace

TwoLevelAtom::TwoLevelAtom(double omega, double gamma, double d2)
    : omega_(omega), gamma_(gamma), d2_(d2) {
  check_atom(omega, gamma, d2);
}

TwoLevelAtom validate_atom(double omega, double gamma, double d2) {
  return TwoLevelAtom(omega, gamma, d2);
}

MediumState::MediumState(const TwoLevelAtom& species, double n_g, double n_e)
    : species_(species), n_g_(n_g), n_e_(n_e) {
  if (!(n_g >= 0.0) || !(n_e >= 0.0) || !std::isfinite(n_g) ||
      !std::isfinite(n_e)) {
    throw ValidationError(ValidationError::Code::negative_density,
                          "densities must be >= 0");
  }
  if (!(n_g + n_e > 0.0)) {
    throw ValidationError(ValidationError::Code::empty_medium,
                          "total density must be > 0");
  }
}

}  // namespace vdwx
