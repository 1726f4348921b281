#include "doctest.h"
#include "helpers.hpp"
#include "roughprob/measure.hpp"

using namespace roughprob;
using testutil::ev;
using testutil::example_space;
using testutil::identity_space;

TEST_SUITE_BEGIN("measure");

TEST_CASE("lower and upper probability on the running example") {
  const auto space = example_space();
  const Event a = ev(space, "1,3,5");
  CHECK(lower_prob(space, a) == Rational(2, 6));
  CHECK(upper_prob(space, a) == Rational(5, 6));
  CHECK(space.measure().of(a) == Rational(3, 6));
  CHECK(rough_prob(space, a) == RoughPair{Rational(1, 3), Rational(5, 6)});
  CHECK(rough_prob(space, a).str() == "(1/3, 5/6)");

  // Table rows for the singleton events.
  CHECK(lower_prob(space, ev(space, "2")) == Rational(0));
  CHECK(upper_prob(space, ev(space, "2")) == Rational(1, 6));
  CHECK(upper_prob(space, ev(space, "1")) == Rational(4, 6));
  CHECK(rough_prob(space, ev(space, "5")) ==
        RoughPair{Rational(0), Rational(1, 3)});
}

TEST_CASE("extremes") {
  const auto space = example_space();
  const Event full = Event::full(space.universe());
  const Event empty = Event::empty(space.universe());
  CHECK(rough_prob(space, full) == RoughPair{Rational(1), Rational(1)});
  CHECK(rough_prob(space, empty) == RoughPair{Rational(0), Rational(0)});
  CHECK(upper_prob(space, empty) == Rational(0));
}

TEST_CASE("conditional rough probability") {
  const auto space = example_space();
  const Event a = ev(space, "4,5,6");
  const Event b = ev(space, "1,3,5");
  CHECK(cond_lower(space, a, b) == Rational(0));
  CHECK(cond_upper(space, a, b) == Rational(2, 5));

  // conditioning on itself, the empty event, the whole space
  CHECK(cond_lower(space, b, b) == Rational(1));
  CHECK(cond_upper(space, b, b) == Rational(1));
  const Event empty = Event::empty(space.universe());
  CHECK(cond_upper(space, empty, b) == Rational(0));
  const Event full = Event::full(space.universe());
  CHECK(cond_upper(space, a, full) == upper_prob(space, a));
  CHECK(cond_lower(space, a, full) == lower_prob(space, a));

  // derived: A={1,2}, B={1,2,3} conditions to (2/6)/(3/6)
  CHECK(cond_lower(space, ev(space, "1,2"), ev(space, "1,2,3")) ==
        Rational(2, 3));
}

TEST_CASE("zero conditioning mass is a typed error") {
  const auto space = example_space();
  // T+({2}) is empty, so the lower mass of {2} vanishes.
  try {
    cond_lower(space, ev(space, "1"), ev(space, "2"));
    FAIL("expected ZeroConditioningMass");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::zero_conditioning_mass);
  }
  CHECK_THROWS_AS(
      cond_upper(space, ev(space, "1"), Event::empty(space.universe())),
      Error);
}

TEST_CASE("classical collapse on the identity map") {
  const auto space = identity_space();
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    const Event a = space.event(bits);
    const Rational p = space.measure().of(a);
    CHECK(rough_prob(space, a) == RoughPair{p, p});
  }
}

TEST_CASE("probability bounds and duality on every two-element space") {
  const auto universe = Universe::make({"1", "2"});
  const Rational one(1);
  for (std::uint64_t i1 = 1; i1 <= 3; ++i1) {
    for (std::uint64_t i2 = 1; i2 <= 3; ++i2) {
      const ApproximationSpace space(
          universe, SetValuedMap::from_bits(universe, {i1, i2}),
          ProbabilityMeasure::uniform(universe));
      for (std::uint64_t bits = 0; bits < 4; ++bits) {
        const Event a = space.event(bits);
        const RoughPair pair = rough_prob(space, a);
        CHECK(Rational(0) <= pair.lower);
        CHECK(pair.lower <= pair.upper);
        CHECK(pair.upper <= one);
        CHECK(lower_prob(space, ~a) == one - upper_prob(space, a));
      }
    }
  }
}

TEST_SUITE_END();
