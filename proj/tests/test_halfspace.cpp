#include <doctest.h>

#include <cmath>

#include "vdwx/errors.hpp"
#include "vdwx/halfspace.hpp"
#include "vdwx/oracle.hpp"

using namespace vdwx;

namespace {
const TwoLevelAtom kProbe(1.0, 0.0, 1.0);
const TwoLevelAtom kSpecies(0.9, 0.02, 1.0);
const double kPi = 3.14159265358979323846;
}  // namespace

TEST_CASE("reference potentials above a cold half space") {
  MediumState cold(kSpecies, 1.0, 0.0);
  SurfaceResult exc =
      surface_potential_qed(kProbe, AtomState::excited, cold, 1.0);
  SurfaceResult gnd =
      surface_potential_qed(kProbe, AtomState::ground, cold, 1.0);
  CHECK(exc.value == doctest::Approx(3.4560975287016422).epsilon(1e-14));
  CHECK(gnd.value == doctest::Approx(-0.1837137796066162).epsilon(1e-14));
  CHECK(exc.flags == 0);
  CHECK(gnd.flags == 0);
}

TEST_CASE("population weighting is linear") {
  MediumState cold(kSpecies, 1.0, 0.0);
  MediumState inverted(kSpecies, 0.0, 1.0);
  MediumState mixed(kSpecies, 0.5, 0.5);
  const double ug =
      surface_potential_qed(kProbe, AtomState::ground, cold, 1.0).value;
  const double ue =
      surface_potential_qed(kProbe, AtomState::ground, inverted, 1.0).value;
  const double um =
      surface_potential_qed(kProbe, AtomState::ground, mixed, 1.0).value;
  CHECK(um == doctest::Approx(0.5 * ug + 0.5 * ue).epsilon(1e-14));
  CHECK(um == doctest::Approx(-1.8199056541541294).epsilon(1e-14));
}

TEST_CASE("potential falls off with the cube of the height") {
  MediumState cold(kSpecies, 1.0, 0.0);
  const double u1 =
      surface_potential_qed(kProbe, AtomState::excited, cold, 1.0).value;
  const double u2 =
      surface_potential_qed(kProbe, AtomState::excited, cold, 2.0).value;
  CHECK(u2 == doctest::Approx(u1 / 8.0).epsilon(1e-14));
  CHECK_THROWS_AS(surface_potential_qed(kProbe, AtomState::excited, cold, 0.0),
                  ValidationError);
}

TEST_CASE("lifshitz route negates the ground probe value exactly") {
  MediumState cold(kSpecies, 1.0, 0.0);
  const double ug =
      surface_potential_qed(kProbe, AtomState::ground, cold, 1.0).value;
  const double ul = surface_potential_lifshitz(kProbe, cold, 1.0).value;
  CHECK(ul == -ug);
  CHECK(ul == doctest::Approx(0.1837137796066162).epsilon(1e-14));

  MediumState other(TwoLevelAtom(1.3, 0.07, 0.8), 0.6, 0.0);
  const double vg =
      surface_potential_qed(kProbe, AtomState::ground, other, 2.3).value;
  const double vl = surface_potential_lifshitz(kProbe, other, 2.3).value;
  CHECK(vl == -vg);
}

TEST_CASE("lifshitz route refuses excited population in the medium") {
  MediumState pumped(kSpecies, 0.7, 0.3);
  CHECK_THROWS_AS(surface_potential_lifshitz(kProbe, pumped, 1.0),
                  NotApplicable);
}

TEST_CASE("excited probe over a pumped medium is marked extrapolated") {
  MediumState pumped(kSpecies, 0.7, 0.3);
  SurfaceResult r =
      surface_potential_qed(kProbe, AtomState::excited, pumped, 1.0);
  CHECK((r.flags & flag_extrapolated) != 0);
  SurfaceResult cold_probe =
      surface_potential_qed(kProbe, AtomState::ground, pumped, 1.0);
  CHECK((cold_probe.flags & flag_extrapolated) == 0);
}

TEST_CASE("spectral integration reproduces the weighted sum") {
  MediumState cold(kSpecies, 1.0, 0.0);
  const double u =
      surface_potential_qed(kProbe, AtomState::excited, cold, 1.0).value;
  const double s =
      surface_potential_spectral(kProbe, AtomState::excited, cold, 1.0).value;
  CHECK(std::abs(s - u) <= 1e-5 * std::abs(u));

  MediumState sharp(TwoLevelAtom(0.9, 0.0, 1.0), 1.0, 0.0);
  CHECK_THROWS_AS(
      surface_potential_spectral(kProbe, AtomState::excited, sharp, 1.0),
      PoleOnAxis);
}

TEST_CASE("near resonance the excited probe dwarfs the lifshitz value") {
  TwoLevelAtom probe(1.01, 0.0, 1.0);
  MediumState cold(TwoLevelAtom(1.0, 0.02, 1.0), 1.0, 0.0);
  const double qed =
      surface_potential_qed(probe, AtomState::excited, cold, 1.0).value;
  const double lif = surface_potential_lifshitz(probe, cold, 1.0).value;
  CHECK(qed > 0.0);
  CHECK(lif > 0.0);
  CHECK(qed / lif == doctest::Approx(100.50248756218903).epsilon(1e-12));
}

TEST_CASE("independent cubature fixes the geometry factor") {
  CHECK(std::abs(halfspace_factor_cubature(1.0) - kPi / 6.0) <=
        1e-6 * (kPi / 6.0));
  CHECK(std::abs(halfspace_factor_cubature(2.0) - kPi / 48.0) <=
        1e-6 * (kPi / 48.0));
  CHECK_THROWS_AS(halfspace_factor_cubature(0.0), ValidationError);
}
