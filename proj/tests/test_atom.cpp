#include <doctest.h>

#include <limits>

#include "vdwx/atom.hpp"
#include "vdwx/errors.hpp"

using namespace vdwx;

TEST_CASE("atom stores validated parameters") {
  TwoLevelAtom a(1.0, 0.02, 1.5);
  CHECK(a.omega() == 1.0);
  CHECK(a.gamma() == 0.02);
  CHECK(a.d2() == 1.5);
  CHECK(a.narrow_line());
}

TEST_CASE("atom rejects bad parameters") {
  CHECK_THROWS_AS(TwoLevelAtom(0.0, 0.02, 1.0), ValidationError);
  CHECK_THROWS_AS(TwoLevelAtom(-1.0, 0.02, 1.0), ValidationError);
  CHECK_THROWS_AS(TwoLevelAtom(1.0, -0.02, 1.0), ValidationError);
  CHECK_THROWS_AS(TwoLevelAtom(1.0, 0.02, 0.0), ValidationError);
  CHECK_THROWS_AS(TwoLevelAtom(1.0, 0.02, -1.0), ValidationError);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(TwoLevelAtom(nan, 0.02, 1.0), ValidationError);
  CHECK_THROWS_AS(TwoLevelAtom(1.0, nan, 1.0), ValidationError);
  CHECK_THROWS_AS(TwoLevelAtom(1.0, 0.02, inf), ValidationError);
}

TEST_CASE("validation error carries a code") {
  try {
    TwoLevelAtom(-1.0, 0.02, 1.0);
    FAIL("expected throw");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ValidationError::Code::non_positive_frequency);
  }
  try {
    TwoLevelAtom(1.0, -0.02, 1.0);
    FAIL("expected throw");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ValidationError::Code::negative_width);
  }
  try {
    TwoLevelAtom(1.0, 0.02, -1.0);
    FAIL("expected throw");
  } catch (const ValidationError& e) {
    CHECK(e.code() == ValidationError::Code::non_positive_dipole);
  }
}

TEST_CASE("zero width is a valid boundary") {
  TwoLevelAtom a(1.0, 0.0, 1.0);
  CHECK(a.gamma() == 0.0);
  CHECK(a.narrow_line());
}

TEST_CASE("narrow line requires gamma below omega") {
  CHECK_FALSE(TwoLevelAtom(1.0, 1.0, 1.0).narrow_line());
  CHECK_FALSE(TwoLevelAtom(1.0, 1.5, 1.0).narrow_line());
  CHECK(TwoLevelAtom(1.0, 0.999, 1.0).narrow_line());
}

TEST_CASE("validate_atom round trips") {
  TwoLevelAtom a = validate_atom(2.0, 0.1, 0.75);
  CHECK(a == TwoLevelAtom(2.0, 0.1, 0.75));
}

TEST_CASE("medium state validates populations") {
  TwoLevelAtom sp(1.0, 0.02, 1.0);
  MediumState m(sp, 0.75, 0.25);
  CHECK(m.n_g() == 0.75);
  CHECK(m.n_e() == 0.25);
  CHECK(m.n_total() == 1.0);
  CHECK_THROWS_AS(MediumState(sp, -0.1, 0.5), ValidationError);
  CHECK_THROWS_AS(MediumState(sp, 0.5, -0.1), ValidationError);
  CHECK_THROWS_AS(MediumState(sp, 0.0, 0.0), ValidationError);
  MediumState cold(sp, 1.0, 0.0);
  CHECK(cold.n_e() == 0.0);
}
