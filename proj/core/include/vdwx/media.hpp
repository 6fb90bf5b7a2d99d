#pragma once

#include "vdwx/atom.hpp"
#include "vdwx/quadrature.hpp"

namespace vdwx {

// Force per unit area between two dilute half spaces at separation L,
// positive = attraction. qed is the population-resolved result; lifshitz is
// the prediction of the Lifshitz formula for the same populations.
struct MediaForce {
  double qed = 0.0;
  double lifshitz = 0.0;
};

// Thermal populations of a two-level species at temperature T:
// n_e / n_g = exp(-omega / T). Requires n_total > 0 and T > 0.
MediumState boltzmann_populations(const TwoLevelAtom& species, double n_total,
                                  double T);

// Closed forms for both force laws. Species A is the probe side: its width is
// treated as vanishing and only species B's width enters. Requires both
// species narrow (gamma < omega), else NotApplicable.
//
//   qed      = P [ ngA ngB S+ - (neA ngB - ngA neB) S- - neA neB S+ ]
//   lifshitz = P (ngA - neA)(ngB - neB) S+
//
// with P = pi d2A d2B / (9 L^3), S+ = S/(S^2 + (gB/2)^2) for the frequency
// sum S, and S- the same expression at the detuning. For fully ground-state
// media the two expressions collapse to the identical arithmetic and agree
// bitwise.
MediaForce media_force(const MediumState& a, const MediumState& b, double L);

// media_force with both populations drawn from boltzmann_populations at a
// common temperature. Literally that composition, nothing else.
MediaForce media_force_thermal(const TwoLevelAtom& species_a, double n_a,
                               const TwoLevelAtom& species_b, double n_b,
                               double T, double L);

// Lifshitz force from its imaginary-frequency integral instead of the closed
// form: (1/32 pi^2 L^3) times the integral over u >= 0 of
// (eps_A(iu) - 1)(eps_B(iu) - 1), with an analytic 1/u^4 tail. Exact against
// the closed form only at vanishing width; the residual gap is first order
// in gamma_B.
double media_force_lifshitz_quadrature(const MediumState& a,
                                       const MediumState& b, double L,
                                       const QuadratureOptions& opts = {});

// Interaction energy per unit area from the frequency integral of the two
// coherent susceptibilities (probe-side width treated as vanishing, same
// convention as media_force). Satisfies u = -F L / 2 and F = du/dL for the
// 1/L^2 potential.
double media_potential_per_area(const MediumState& a, const MediumState& b,
                                double L, const QuadratureOptions& opts = {});

}  // namespace vdwx
