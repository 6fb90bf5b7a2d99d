#include <doctest.h>

#include <cmath>

#include "vdwx/errors.hpp"
#include "vdwx/oracle.hpp"
#include "vdwx/pair.hpp"

using namespace vdwx;

namespace {

PairConfiguration canonical(AtomState sa, AtomState sb) {
  return PairConfiguration{TwoLevelAtom(1.0, 0.0, 1.0), sa,
                           TwoLevelAtom(0.9, 0.02, 1.0), sb};
}

}  // namespace

TEST_CASE("closed form at the reference point") {
  PairResult eg = pair_closed_nearzone(
      canonical(AtomState::excited, AtomState::ground), 1.0);
  CHECK(eg.value.shift ==
        doctest::Approx(6.6006600660065997).epsilon(1e-14));
  CHECK(eg.value.half_width ==
        doctest::Approx(0.66006600660065995).epsilon(1e-14));
  CHECK(eg.flags == 0);

  PairResult gg = pair_closed_nearzone(
      canonical(AtomState::ground, AtomState::ground), 1.0);
  CHECK(gg.value.shift ==
        doctest::Approx(-0.35086747366185606).epsilon(1e-14));
  CHECK(gg.value.half_width ==
        doctest::Approx(0.0018466709140097688).epsilon(1e-14));
}

TEST_CASE("like states also acquire a width when atom B is broadened") {
  // The resonant denominator keeps its imaginary part even off resonance, so
  // the induced width is small but strictly positive whenever gamma_b > 0.
  PairResult gg = pair_closed_nearzone(
      canonical(AtomState::ground, AtomState::ground), 1.0);
  PairResult ee = pair_closed_nearzone(
      canonical(AtomState::excited, AtomState::excited), 1.0);
  CHECK(gg.value.half_width > 0.0);
  CHECK(ee.value.half_width > 0.0);
  CHECK(ee.value.half_width == gg.value.half_width);
}

TEST_CASE("exchange of states flips the shift and keeps the width") {
  for (double R : {0.5, 1.0, 3.0}) {
    PairResult eg = pair_closed_nearzone(
        canonical(AtomState::excited, AtomState::ground), R);
    PairResult ge = pair_closed_nearzone(
        canonical(AtomState::ground, AtomState::excited), R);
    CHECK(eg.value.shift == -ge.value.shift);
    CHECK(eg.value.half_width == ge.value.half_width);

    PairResult ee = pair_closed_nearzone(
        canonical(AtomState::excited, AtomState::excited), R);
    PairResult gg = pair_closed_nearzone(
        canonical(AtomState::ground, AtomState::ground), R);
    CHECK(ee.value.shift == -gg.value.shift);
    CHECK(ee.value.half_width == gg.value.half_width);
  }
}

TEST_CASE("shift carries the sixth power of the separation") {
  PairConfiguration pc = canonical(AtomState::excited, AtomState::ground);
  PairResult r1 = pair_closed_nearzone(pc, 1.0);
  PairResult r2 = pair_closed_nearzone(pc, 2.0);
  CHECK(r2.value.shift ==
        doctest::Approx(r1.value.shift / 64.0).epsilon(1e-14));
}

TEST_CASE("probe width never enters the closed form") {
  PairConfiguration narrow{TwoLevelAtom(1.0, 0.0, 1.0), AtomState::excited,
                           TwoLevelAtom(0.9, 0.02, 1.0), AtomState::ground};
  PairConfiguration broad{TwoLevelAtom(1.0, 0.5, 1.0), AtomState::excited,
                          TwoLevelAtom(0.9, 0.02, 1.0), AtomState::ground};
  PairResult a = pair_closed_nearzone(narrow, 1.0);
  PairResult b = pair_closed_nearzone(broad, 1.0);
  CHECK(a.value.shift == b.value.shift);
  CHECK(a.value.half_width == b.value.half_width);
}

TEST_CASE("nonpositive separation is rejected") {
  PairConfiguration pc = canonical(AtomState::excited, AtomState::ground);
  CHECK_THROWS_AS(pair_closed_nearzone(pc, 0.0), ValidationError);
  CHECK_THROWS_AS(pair_closed_nearzone(pc, -1.0), ValidationError);
}

TEST_CASE("degenerate resonance is flagged, not thrown") {
  PairConfiguration pc{TwoLevelAtom(1.0, 0.0, 1.0), AtomState::excited,
                       TwoLevelAtom(1.0, 0.0, 1.0), AtomState::ground};
  PairResult r = pair_closed_nearzone(pc, 1.0);
  CHECK((r.flags & flag_degenerate_resonance) != 0);
  CHECK(r.value.shift == 0.0);
  CHECK(r.value.half_width == 0.0);
}

TEST_CASE("sharp like-state pair stays finite") {
  PairConfiguration pc{TwoLevelAtom(1.0, 0.0, 1.0), AtomState::ground,
                       TwoLevelAtom(0.9, 0.0, 1.0), AtomState::ground};
  PairResult r = pair_closed_nearzone(pc, 1.0);
  const double expected = -(2.0 / 3.0) / 1.9;
  CHECK(r.value.shift == doctest::Approx(expected).epsilon(1e-14));
  CHECK(r.value.half_width == 0.0);
  CHECK(r.flags == 0);
}

TEST_CASE("brute force integration reproduces the closed form") {
  for (auto states : {std::pair{AtomState::excited, AtomState::ground},
                      std::pair{AtomState::ground, AtomState::ground},
                      std::pair{AtomState::excited, AtomState::excited}}) {
    PairConfiguration pc = canonical(states.first, states.second);
    PairAgreement check = verify_pair_closed(pc, 1.0, {});
    CAPTURE(check.rel_gap);
    CHECK(check.rel_gap <= 1e-5);
  }
}

TEST_CASE("brute force route needs a finite width on atom B") {
  PairConfiguration pc{TwoLevelAtom(1.0, 0.0, 1.0), AtomState::excited,
                       TwoLevelAtom(0.9, 0.0, 1.0), AtomState::ground};
  CHECK_THROWS_AS(pair_quadrature_nearzone(pc, 1.0), PoleOnAxis);
  CHECK_THROWS_AS(pair_spectral_extrapolated(pc, 1.0), PoleOnAxis);
}

TEST_CASE("spectral route bounds the regulator") {
  PairConfiguration pc = canonical(AtomState::excited, AtomState::ground);
  CHECK_THROWS_AS(pair_spectral_general(pc, 1e-3, 0.0), RegulatorTooLarge);
  CHECK_THROWS_AS(pair_spectral_general(pc, 1e-3, -0.1), RegulatorTooLarge);
  CHECK_THROWS_AS(pair_spectral_general(pc, 1e-3, 0.2), RegulatorTooLarge);
  try {
    pair_spectral_general(pc, 1e-3, 0.5);
    FAIL("expected throw");
  } catch (const RegulatorTooLarge& e) {
    CHECK(e.eta() == 0.5);
  }
}

TEST_CASE("regulated spectral value sits near the closed form") {
  PairConfiguration pc = canonical(AtomState::excited, AtomState::ground);
  const double R = 1e-3;
  PairResult closed = pair_closed_nearzone(pc, R);
  PairResult one = pair_spectral_general(pc, R, 0.1 * 0.02);
  CHECK((one.flags & flag_far_zone_unvalidated) == 0);
  CHECK(std::abs(one.value.shift - closed.value.shift) <=
        1e-2 * std::abs(closed.value.shift));
}

TEST_CASE("extrapolation removes the regulator bias") {
  PairConfiguration pc = canonical(AtomState::excited, AtomState::ground);
  const double R = 1e-3;
  PairResult closed = pair_closed_nearzone(pc, R);
  PairResult ext = pair_spectral_extrapolated(pc, R);
  CHECK((ext.flags & flag_extrapolated) != 0);
  CHECK(std::abs(ext.value.shift - closed.value.shift) <=
        1e-3 * std::abs(closed.value.shift));
  PairResult one = pair_spectral_general(pc, R, 0.1 * 0.02);
  const double bias_one = std::abs(one.value.shift - closed.value.shift);
  const double bias_ext = std::abs(ext.value.shift - closed.value.shift);
  CHECK(bias_ext < bias_one);
}

TEST_CASE("far zone results are flagged as unvalidated") {
  PairConfiguration pc = canonical(AtomState::excited, AtomState::ground);
  // a loose regulator keeps the oscillatory tail affordable out here
  PairResult far = pair_spectral_general(pc, 10.0, 0.05);
  CHECK((far.flags & flag_far_zone_unvalidated) != 0);
}
