#pragma once

#include <span>

#include "vdwx/atom.hpp"
#include "vdwx/quadrature.hpp"

namespace vdwx {

// Row flags attached to computed values. Kept as a bitmask so sweep rows can
// carry several at once.
inline constexpr unsigned flag_degenerate_resonance = 1u << 0;
inline constexpr unsigned flag_far_zone_unvalidated = 1u << 1;
inline constexpr unsigned flag_extrapolated = 1u << 2;

// Level shift of the probe and the induced half width (both in frequency
// units). The full decay rate picks up 2 * half_width.
struct ShiftWidth {
  double shift = 0.0;
  double half_width = 0.0;
};

struct PairResult {
  ShiftWidth value;
  unsigned flags = 0;
};

// Probe width treated as vanishing throughout; quadrature routes realize it
// as an infinitesimal positive imaginary part (1e-6 of atom B's width).
inline constexpr double probe_width_scale = 1e-6;

// Near-zone closed form. W = sigma * (2 d2A d2B / 3 R^6) / (X + sigma i gB/2)
// with X the detuning (opposite states) or the frequency sum (like states),
// sigma > 0 for an excited probe contribution against X. shift = Re W,
// half_width = -Im W >= 0. Degenerate resonance (X = 0 and gB = 0) yields
// zeros with flag_degenerate_resonance set.
PairResult pair_closed_nearzone(const PairConfiguration& pc, double R);

// Near-zone brute-force check: the frequency integral of the product of the
// two coherent polarizabilities against the static interaction kernel, with
// an analytic 1/omega^4 tail beyond the cutoff. Requires gamma_b > 0 so the
// poles sit off the real axis (throws PoleOnAxis otherwise). Throws
// QuadratureNonConvergent when the engine gives up.
PairResult pair_quadrature_nearzone(const PairConfiguration& pc, double R,
                                    const QuadratureOptions& opts = {});

// Full retarded spectral integral with an exponential frequency regulator
// exp(-eta |omega|), valid at any separation. The regulated value converges
// linearly in eta; use pair_spectral_extrapolated for the physical limit.
// eta must be positive and no larger than a tenth of the smaller transition
// frequency (RegulatorTooLarge). Sets flag_far_zone_unvalidated when
// R * max(omega) > 1e-2 since only the near zone is cross-checked against
// the closed form.
PairResult pair_spectral_general(const PairConfiguration& pc, double R,
                                 double eta,
                                 const QuadratureOptions& opts = {});

// Richardson extrapolation of pair_spectral_general to eta -> 0 over a
// descending ladder of regulators (default {0.1, 0.05, 0.025} * gamma_b).
// The result carries flag_extrapolated: it is a limit estimate, not a
// directly converged integral.
PairResult pair_spectral_extrapolated(const PairConfiguration& pc, double R,
                                      std::span<const double> etas = {},
                                      const QuadratureOptions& opts = {});

}  // namespace vdwx
