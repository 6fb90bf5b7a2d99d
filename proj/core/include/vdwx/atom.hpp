#pragma once

#include "vdwx/errors.hpp"

namespace vdwx {

enum class AtomState { ground, excited };

// Two-level species: transition frequency omega, excited-state width gamma,
// squared dipole matrix element d2 = |d|^2. Natural units throughout
// (hbar = c = k_B = 1); frequencies and widths share one unit, energies too.
class TwoLevelAtom {
 public:
  TwoLevelAtom(double omega, double gamma, double d2);

  double omega() const { return omega_; }
  double gamma() const { return gamma_; }
  double d2() const { return d2_; }

  // True when the line is narrow enough for the resonant closed forms.
  bool narrow_line() const { return gamma_ < omega_; }

  friend bool operator==(const TwoLevelAtom&, const TwoLevelAtom&) = default;

 private:
  double omega_;
  double gamma_;
  double d2_;
};

// Validating factory. Requires omega > 0, gamma >= 0, d2 > 0.
TwoLevelAtom validate_atom(double omega, double gamma, double d2);

// A gas of one species with given ground and excited number densities.
// Densities are non-negative and may not both vanish.
class MediumState {
 public:
  MediumState(const TwoLevelAtom& species, double n_g, double n_e);

  const TwoLevelAtom& species() const { return species_; }
  double n_g() const { return n_g_; }
  double n_e() const { return n_e_; }
  double n_total() const { return n_g_ + n_e_; }

  friend bool operator==(const MediumState&, const MediumState&) = default;

 private:
  TwoLevelAtom species_;
  double n_g_;
  double n_e_;
};

// Two atoms with definite internal states. Atom A is the probe whose level
// shift and induced width are reported; only atom B's width enters the
// closed forms (the probe width is treated as vanishing).
struct PairConfiguration {
  TwoLevelAtom atom_a;
  AtomState state_a;
  TwoLevelAtom atom_b;
  AtomState state_b;
};

}  // namespace vdwx
