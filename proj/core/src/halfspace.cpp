#include "vdwx/halfspace.hpp"

#include <cmath>
#include <numbers>

#include "pair_detail.hpp"
#include "vdwx/response.hpp"

namespace vdwx {

namespace {

constexpr double pi = std::numbers::pi;

void require_height(double z0) {
  if (!(z0 > 0.0)) {
    throw ValidationError(ValidationError::Code::non_positive_distance,
                          "surface distance must be > 0");
  }
}

// Pairwise 1/r^6 summation over a half space turns the pair coefficient into
// coeff * n * pi / (6 z0^3). Returns the population-weighted sum of the
// closed-form shift coefficients.
double superposition_shift(const TwoLevelAtom& probe, AtomState probe_state,
                           const MediumState& medium, unsigned& flags) {
  double sum = 0.0;
  if (medium.n_g() > 0.0) {
    const auto k = detail::closed_pair_coeffs(probe, probe_state,
                                              medium.species(),
                                              AtomState::ground);
    if (k.degenerate) flags |= flag_degenerate_resonance;
    sum += medium.n_g() * k.shift_over_r6;
  }
  if (medium.n_e() > 0.0) {
    const auto k = detail::closed_pair_coeffs(probe, probe_state,
                                              medium.species(),
                                              AtomState::excited);
    if (k.degenerate) flags |= flag_degenerate_resonance;
    sum += medium.n_e() * k.shift_over_r6;
  }
  return sum;
}

}  // namespace

SurfaceResult surface_potential_qed(const TwoLevelAtom& probe,
                                    AtomState probe_state,
                                    const MediumState& medium, double z0) {
  require_height(z0);
  SurfaceResult out;
  // The excited-probe/excited-population combination composes the same
  // superposition as the printed cases but extends beyond them.
  if (probe_state == AtomState::excited && medium.n_e() > 0.0) {
    out.flags |= flag_extrapolated;
  }
  const double coeff = superposition_shift(probe, probe_state, medium, out.flags);
  out.value = coeff * (pi / (6.0 * std::pow(z0, 3)));
  return out;
}

SurfaceResult surface_potential_spectral(const TwoLevelAtom& probe,
                                         AtomState probe_state,
                                         const MediumState& medium, double z0,
                                         const QuadratureOptions& opts) {
  require_height(z0);
  if (medium.species().gamma() == 0.0) {
    throw PoleOnAxis(medium.species().omega());
  }
  const TwoLevelAtom reg_probe(probe.omega(),
                               probe_width_scale * medium.species().gamma(),
                               probe.d2());

  auto f = [&](double w) -> std::complex<double> {
    return polarizability(reg_probe, probe_state, ResponseKind::coherent, w) *
           (permittivity(medium, ResponseKind::coherent, w) - 1.0);
  };

  const double wmax = std::max(probe.omega(), medium.species().omega());
  const double cutoff = 1e4 * wmax;
  const double seeds[] = {-probe.omega(), -medium.species().omega(),
                          medium.species().omega(), probe.omega()};
  const auto rep = integrate_adaptive(f, -cutoff, cutoff, seeds, opts);
  if (!rep.converged) {
    throw QuadratureNonConvergent(rep.value, rep.abs_error_estimate,
                                  rep.evaluations);
  }
  const std::complex<double> tail =
      (std::pow(cutoff, 4) * (f(cutoff) + f(-cutoff))) /
      (3.0 * std::pow(cutoff, 3));

  SurfaceResult out;
  const std::complex<double> prefactor(0.0, 1.0 / (16.0 * pi * std::pow(z0, 3)));
  out.value = (prefactor * (rep.value + tail)).real();
  if (probe_state == AtomState::excited && medium.n_e() > 0.0) {
    out.flags |= flag_extrapolated;
  }
  return out;
}

SurfaceResult surface_potential_lifshitz(const TwoLevelAtom& probe,
                                         const MediumState& medium, double z0) {
  require_height(z0);
  if (medium.n_e() > 0.0) {
    throw NotApplicable(
        "Lifshitz half-space form is only defined for a fully ground-state "
        "medium");
  }
  // Exactly the negated ground-probe superposition, so the sign relation to
  // the population-resolved result holds bitwise.
  SurfaceResult out;
  unsigned flags = 0;
  const double coeff =
      superposition_shift(probe, AtomState::ground, medium, flags);
  out.value = -(coeff * (pi / (6.0 * std::pow(z0, 3))));
  out.flags = flags;
  return out;
}

}  // namespace vdwx
