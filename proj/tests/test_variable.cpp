#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "roughprob/variable.hpp"

using namespace roughprob;
using testutil::ev;
using testutil::example_space;
using testutil::identity_space;

namespace {

RoughVariable example_identity() {
  std::vector<Rational> values;
  for (long long i = 1; i <= 6; ++i) values.emplace_back(i);
  return build_variable(example_space(), std::move(values));
}

RoughVariable example_parity() {
  std::vector<Rational> values;
  for (long long i = 1; i <= 6; ++i) values.emplace_back(i % 2);
  return build_variable(example_space(), std::move(values));
}

}  // namespace

TEST_SUITE_BEGIN("variable");

TEST_CASE("singleton masses reproduce the reference table") {
  const auto var = example_identity();
  REQUIRE(var.level_count() == 6);
  const Rational lower[] = {{1, 6}, {0}, {1, 6}, {1, 6}, {0}, {0}};
  const Rational upper[] = {{4, 6}, {1, 6}, {1, 6}, {1, 6}, {2, 6}, {2, 6}};
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(var.levels()[k] == Rational(static_cast<long long>(k + 1)));
    CHECK(var.lower_mass(k) == lower[k]);
    CHECK(var.upper_mass(k) == upper[k]);
  }
  CHECK(var.lower_mass_total() == Rational(1, 2));
  CHECK(var.upper_mass_total() == Rational(11, 6));

  const auto rows = singleton_table(var);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].upper == Rational(2, 3));  // printed reduced, equal to 4/6
  CHECK(rows[4].upper.str() == "1/3");
}

TEST_CASE("constant variable has a single level with full mass") {
  const auto space = example_space();
  const RoughVariable var =
      build_variable(space, std::vector<Rational>(6, Rational(5)));
  REQUIRE(var.level_count() == 1);
  CHECK(var.levels()[0] == Rational(5));
  CHECK(var.preimage(0) == Event::full(space.universe()));
  CHECK(var.lower_mass(0) == Rational(1));
  CHECK(var.upper_mass(0) == Rational(1));
  const auto rows = singleton_table(var);
  CHECK(rows.size() == 1);
}

TEST_CASE("non-injective variables group preimages") {
  const auto var = example_parity();
  REQUIRE(var.level_count() == 2);
  CHECK(var.levels()[0] == Rational(0));
  CHECK(var.levels()[1] == Rational(1));
  CHECK(var.preimage(0) == ev(var.space(), "2,4,6"));
  CHECK(var.preimage(1) == ev(var.space(), "1,3,5"));
  CHECK(var.lower_mass(0) == Rational(1, 6));
  CHECK(var.upper_mass(0) == Rational(2, 3));
  CHECK(var.lower_mass(1) == Rational(1, 3));
  CHECK(var.upper_mass(1) == Rational(5, 6));
}

TEST_CASE("identity map makes every row classical") {
  std::vector<Rational> die;
  for (long long i = 1; i <= 6; ++i) die.emplace_back(i);
  const auto var = build_variable(identity_space(), die);
  for (const auto& row : singleton_table(var)) {
    CHECK(row.lower == Rational(1, 6));
    CHECK(row.upper == Rational(1, 6));
  }
}

TEST_CASE("build_variable validation") {
  const auto space = example_space();
  try {
    build_variable(space, std::map<std::string, Rational>{{"1", Rational(1)}});
    FAIL("expected MissingValue");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::missing_value);
  }
  try {
    std::map<std::string, Rational> values;
    for (int i = 1; i <= 6; ++i) values[std::to_string(i)] = Rational(i);
    values["7"] = Rational(7);
    build_variable(space, values);
    FAIL("expected UnknownLabel");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_label);
  }
}

TEST_CASE("cdf in singleton-sum mode accumulates the mass table") {
  const auto var = example_identity();
  CHECK(cdf(var, Rational(2), CdfMode::singleton_sum) ==
        RoughPair{Rational(1, 6), Rational(5, 6)});
  CHECK(cdf(var, Rational(5, 2), CdfMode::singleton_sum) ==
        RoughPair{Rational(1, 6), Rational(5, 6)});
  CHECK(cdf(var, Rational(6), CdfMode::singleton_sum) ==
        RoughPair{Rational(1, 2), Rational(11, 6)});
  CHECK(cdf(var, Rational(100), CdfMode::singleton_sum) ==
        RoughPair{var.lower_mass_total(), var.upper_mass_total()});
  CHECK(cdf(var, Rational(0), CdfMode::singleton_sum) ==
        RoughPair{Rational(0), Rational(0)});
  CHECK(cdf(var, Rational(0), CdfMode::event) ==
        RoughPair{Rational(0), Rational(0)});
}

TEST_CASE("cdf profile matches the corrected piecewise table") {
  const auto profile = cdf_profile(example_identity(), CdfMode::singleton_sum);

  // Lower component: 0, then 1/6 on [1,3), 2/6 on [3,4), 3/6 from 4 on.
  REQUIRE(profile.lower.size() == 3);
  CHECK(profile.lower[0].at == Rational(1));
  CHECK(profile.lower[0].value == Rational(1, 6));
  CHECK(profile.lower[1].at == Rational(3));
  CHECK(profile.lower[1].value == Rational(2, 6));
  CHECK(profile.lower[2].at == Rational(4));
  CHECK(profile.lower[2].value == Rational(3, 6));

  // Upper component: 4/6, 5/6, 1, 7/6, 9/6, 11/6 at u = 1..6.
  REQUIRE(profile.upper.size() == 6);
  const Rational values[] = {{4, 6}, {5, 6}, {1}, {7, 6}, {9, 6}, {11, 6}};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(profile.upper[i].at == Rational(static_cast<long long>(i + 1)));
    CHECK(profile.upper[i].value == values[i]);
  }
}

TEST_CASE("event-mode cdf follows the event definition exactly") {
  const auto var = example_identity();
  // T+({1,2}) = {1,2} and T-1({1,2}) = {1,2,5,6}, so F*(2) = (2/6, 4/6).
  CHECK(cdf(var, Rational(2), CdfMode::event) ==
        RoughPair{Rational(1, 3), Rational(2, 3)});

  // Against the label-set oracle, at half-step points across the range.
  const auto oracle_map = testutil::example_label_map();
  for (int twice_u = -1; twice_u <= 14; ++twice_u) {
    const Rational u(twice_u, 2);
    testutil::LabelSet below;
    for (long long i = 1; i <= 6; ++i) {
      if (Rational(i) <= u) below.insert(std::to_string(i));
    }
    const auto low = testutil::oracle_lower_inverse(oracle_map, below);
    const auto up = testutil::oracle_upper_inverse(oracle_map, below);
    const RoughPair expected{
        Rational(static_cast<long long>(low.size()), 6),
        Rational(static_cast<long long>(up.size()), 6)};
    CHECK(cdf(var, u, CdfMode::event) == expected);
  }
}

TEST_CASE("event-mode cdf is capped at one, singleton-sum is not") {
  const auto var = example_identity();
  const auto event_profile = cdf_profile(var, CdfMode::event);
  for (const auto& step : event_profile.upper) {
    CHECK(step.value <= Rational(1));
  }
  CHECK(cdf(var, Rational(6), CdfMode::event).upper == Rational(1));
  CHECK(cdf(var, Rational(6), CdfMode::singleton_sum).upper == Rational(11, 6));
}

TEST_CASE("cdf is non-decreasing in both components and modes") {
  for (const auto& var : {example_identity(), example_parity()}) {
    for (const CdfMode mode : {CdfMode::singleton_sum, CdfMode::event}) {
      RoughPair prev{Rational(-1), Rational(-1)};
      for (int twice_u = -2; twice_u <= 14; ++twice_u) {
        const RoughPair cur = cdf(var, Rational(twice_u, 2), mode);
        CHECK(prev.lower <= cur.lower);
        CHECK(prev.upper <= cur.upper);
        prev = cur;
      }
      CHECK(cdf(var, Rational(100), CdfMode::event) ==
            RoughPair{Rational(1), Rational(1)});
    }
  }
}

TEST_CASE("rough expectation") {
  CHECK(expectation(example_identity()) ==
        RoughPair{Rational(4, 3), Rational(35, 6)});

  std::vector<Rational> die;
  for (long long i = 1; i <= 6; ++i) die.emplace_back(i);
  const auto classical = build_variable(identity_space(), die);
  CHECK(expectation(classical) == RoughPair{Rational(7, 2), Rational(7, 2)});

  CHECK(expectation(example_parity()) ==
        RoughPair{Rational(1, 3), Rational(5, 6)});
}

TEST_CASE("raw moments") {
  const auto var = example_identity();
  CHECK(raw_moment(var, 2) == RoughPair{Rational(13, 3), Rational(155, 6)});
  CHECK(raw_moment(var, 1) == expectation(var));
  const RoughVariable constant =
      build_variable(example_space(), std::vector<Rational>(6, Rational(5)));
  CHECK(raw_moment(constant, 3) == RoughPair{Rational(125), Rational(125)});
  CHECK_THROWS_AS(raw_moment(var, 0), std::invalid_argument);
}

TEST_CASE("affine expectation matches the direct sums") {
  const auto var = example_identity();
  CHECK(affine_expectation(var, Rational(2), Rational(3)) ==
        RoughPair{Rational(25, 6), Rational(103, 6)});
  CHECK(affine_expectation(var, Rational(1), Rational(0)) == expectation(var));
  // a = 0 keeps the original masses: the lower component is b*c, not b.
  CHECK(affine_expectation(var, Rational(0), Rational(1)) ==
        RoughPair{Rational(1, 2), Rational(11, 6)});

  // direct-sum oracle across a small grid
  for (long long na = -2; na <= 2; ++na) {
    for (long long nb = -2; nb <= 2; ++nb) {
      const Rational a(na), b(nb);
      RoughPair direct;
      for (std::size_t k = 0; k < var.level_count(); ++k) {
        direct.lower += (a * var.levels()[k] + b) * var.lower_mass(k);
        direct.upper += (a * var.levels()[k] + b) * var.upper_mass(k);
      }
      CHECK(affine_expectation(var, a, b) == direct);
    }
  }
}

TEST_CASE("variance, direct and closed form") {
  const auto var = example_identity();
  const RoughPair expected{Rational(5, 3), Rational(4355, 216)};
  CHECK(variance_direct(var) == expected);
  CHECK(variance_formula(var) == expected);

  const RoughVariable constant =
      build_variable(example_space(), std::vector<Rational>(6, Rational(5)));
  CHECK(variance_direct(constant) == RoughPair{Rational(0), Rational(0)});
  CHECK(variance_formula(constant) == RoughPair{Rational(0), Rational(0)});

  std::vector<Rational> die;
  for (long long i = 1; i <= 6; ++i) die.emplace_back(i);
  const auto classical = build_variable(identity_space(), die);
  CHECK(variance_direct(classical) ==
        RoughPair{Rational(35, 12), Rational(35, 12)});

  CHECK(variance_direct(example_parity()) == variance_formula(example_parity()));
  CHECK(variance_direct(example_parity()) ==
        RoughPair{Rational(1, 6), Rational(35, 72)});
}

TEST_CASE("affine variance closed form equals the direct expansion") {
  const auto var = example_identity();
  CHECK(affine_variance_formula(var, Rational(1), Rational(0)) ==
        variance_formula(var));
  CHECK(affine_variance_formula(var, Rational(2), Rational(1)) ==
        RoughPair{Rational(281, 18), Rational(7211, 216)});

  // a = 0, b = 0 degenerates to c E_low(U)^2 (and d E_up(U)^2).
  const RoughPair e = expectation(var);
  CHECK(affine_variance_formula(var, Rational(0), Rational(0)) ==
        RoughPair{var.lower_mass_total() * e.lower * e.lower,
                  var.upper_mass_total() * e.upper * e.upper});

  for (const auto& v : {example_identity(), example_parity()}) {
    for (long long na = -2; na <= 2; ++na) {
      for (long long nb = -2; nb <= 2; ++nb) {
        const Rational a(na), b(nb);
        const RoughPair center = expectation(v);
        RoughPair direct;
        for (std::size_t k = 0; k < v.level_count(); ++k) {
          const Rational dl = a * v.levels()[k] + b - center.lower;
          const Rational du = a * v.levels()[k] + b - center.upper;
          direct.lower += dl * dl * v.lower_mass(k);
          direct.upper += du * du * v.upper_mass(k);
        }
        CHECK(affine_variance_formula(v, a, b) == direct);
      }
    }
  }
}

TEST_CASE("mass totals are bounded and collapse when preimages are exact") {
  const auto universe = Universe::make({"1", "2"});
  for (std::uint64_t i1 = 1; i1 <= 3; ++i1) {
    for (std::uint64_t i2 = 1; i2 <= 3; ++i2) {
      const ApproximationSpace space(
          universe, SetValuedMap::from_bits(universe, {i1, i2}),
          ProbabilityMeasure::uniform(universe));
      for (const auto& values :
           {std::vector<Rational>{Rational(1), Rational(2)},
            std::vector<Rational>{Rational(3), Rational(3)},
            std::vector<Rational>{Rational(-1), Rational(4)}}) {
        const RoughVariable var = build_variable(space, values);
        CHECK(Rational(0) <= var.lower_mass_total());
        CHECK(var.lower_mass_total() <= Rational(1));
        CHECK(Rational(1) <= var.upper_mass_total());
        CHECK(var.upper_mass_total() <= Rational(2));
        CHECK(variance_direct(var) == variance_formula(var));
      }
    }
  }

  const auto space = identity_space();
  std::vector<Rational> die;
  for (long long i = 1; i <= 6; ++i) die.emplace_back(i);
  const RoughVariable var = build_variable(space, die);
  for (std::size_t k = 0; k < var.level_count(); ++k) {
    CHECK(var.lower_mass(k) == var.upper_mass(k));
  }
}

TEST_CASE("lower expectation stays below the upper one for nonnegative levels") {
  const auto var = example_identity();
  const RoughPair e = expectation(var);
  CHECK(e.lower <= e.upper);
  const auto parity = example_parity();
  CHECK(expectation(parity).lower <= expectation(parity).upper);
}

TEST_SUITE_END();
