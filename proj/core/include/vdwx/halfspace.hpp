#pragma once

#include "vdwx/pair.hpp"

namespace vdwx {

struct SurfaceResult {
  double value = 0.0;
  unsigned flags = 0;
};

// Atom at height z0 above a dilute half space: pairwise sum of the near-zone
// closed forms over the population-weighted medium, giving the pair
// coefficient times n pi / (6 z0^3) per population. The excited-probe over
// partially-excited-medium combination composes the same superposition but
// goes beyond the cases the closed forms were printed for; such rows carry
// flag_extrapolated.
SurfaceResult surface_potential_qed(const TwoLevelAtom& probe,
                                    AtomState probe_state,
                                    const MediumState& medium, double z0);

// Same quantity from the frequency integral of the probe polarizability
// against the medium susceptibility (both coherent), with the geometry
// integral done in closed form. Requires the medium width positive.
SurfaceResult surface_potential_spectral(const TwoLevelAtom& probe,
                                         AtomState probe_state,
                                         const MediumState& medium, double z0,
                                         const QuadratureOptions& opts = {});

// Lifshitz-formula prediction for the same geometry. Only defined for a
// fully ground-state medium (NotApplicable otherwise). Always repulsive for
// the excited probe configuration; equals minus the ground-probe QED value
// exactly.
SurfaceResult surface_potential_lifshitz(const TwoLevelAtom& probe,
                                         const MediumState& medium, double z0);

}  // namespace vdwx
