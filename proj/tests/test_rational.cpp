#include <numeric>
#include <sstream>

#include "doctest.h"
#include "roughprob/rational.hpp"

using roughprob::BigInt;
using roughprob::Errc;
using roughprob::Error;
using roughprob::Rational;

TEST_SUITE_BEGIN("rational");

TEST_CASE("construction canonicalizes to lowest terms") {
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(2, 6).numerator() == 1);
  CHECK(Rational(2, 6).denominator() == 3);
  CHECK(Rational(-2, -6) == Rational(1, 3));
  CHECK(Rational(2, -6) == Rational(-1, 3));
  CHECK(Rational(2, -6).denominator() == 3);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("lowest-terms invariant holds across arithmetic") {
  // Small deterministic sweep; gcd(|num|, den) must stay 1 and den > 0.
  for (long long n1 = -6; n1 <= 6; ++n1) {
    for (long long d1 = 1; d1 <= 6; ++d1) {
      for (long long n2 = -6; n2 <= 6; ++n2) {
        for (long long d2 = 1; d2 <= 6; ++d2) {
          const Rational a(n1, d1), b(n2, d2);
          for (const Rational& r :
               {a + b, a - b, a * b, b.is_zero() ? a : a / b}) {
            CHECK(r.denominator() > 0);
            CHECK(boost::multiprecision::gcd(BigInt(boost::multiprecision::abs(
                                                 r.numerator())),
                                             r.denominator()) == 1);
          }
        }
      }
    }
  }
}

TEST_CASE("exact arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(5, 3) == Rational(-5, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK_THROWS_WITH_AS(Rational(1) / Rational(0), "rational division by zero",
                       Error);
}

TEST_CASE("ordering is exact") {
  CHECK(Rational(1, 3) < Rational(2, 5));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(7, 2) <= Rational(7, 2));
  CHECK(Rational(5, 3) > Rational(3, 2));
  CHECK(Rational(1, 3).sign() == 1);
  CHECK(Rational(-1, 3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("parse accepts integers and fractions, unreduced included") {
  CHECK(Rational::parse("2/6") == Rational(1, 3));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("35/6") == Rational(35, 6));
  CHECK(Rational::parse("-4/6") == Rational(-2, 3));
  CHECK(Rational::parse("0/5") == Rational(0));
}

TEST_CASE("parse rejects malformed input") {
  const auto code_of = [](const char* text) {
    try {
      Rational::parse(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::unknown_law;  // not reached
  };
  CHECK(code_of("1/0") == Errc::division_by_zero);
  CHECK(code_of("abc") == Errc::syntax_error);
  CHECK(code_of("1.5") == Errc::syntax_error);
  CHECK(code_of("1/-2") == Errc::syntax_error);
  CHECK(code_of("1/2/3") == Errc::syntax_error);
  CHECK(code_of("") == Errc::syntax_error);
  CHECK(code_of("-") == Errc::syntax_error);
  CHECK(code_of("3/") == Errc::syntax_error);
}

TEST_CASE("printing is lowest terms, integers bare") {
  CHECK(Rational(4, 6).str() == "2/3");
  CHECK(Rational(4355, 216).str() == "4355/216");
  CHECK(Rational(-5, 3).str() == "-5/3");
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(12, 4).str() == "3");
  std::ostringstream out;
  out << Rational(35, 6);
  CHECK(out.str() == "35/6");
}

TEST_CASE("values the calculus relies on stay exact at scale") {
  // (35/6)^2 scaled by 1/6 and subtracted from 155/6: the upper-variance
  // arithmetic path, which floats would miss.
  const Rational m2(155, 6);
  const Rational e(35, 6);
  const Rational d(11, 6);
  CHECK(m2 - (Rational(2) - d) * e * e == Rational(4355, 216));
}

TEST_SUITE_END();
