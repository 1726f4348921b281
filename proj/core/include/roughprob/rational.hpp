#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "roughprob/error.hpp"

namespace roughprob {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number: arbitrary-precision, always in lowest terms with a
/// positive denominator. All probabilities, expectations and variances in
/// this library are Rationals; nothing in the calculus ever rounds.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long long value) : value_(value) {}  // NOLINT: implicit by intent
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Parses "p" or "p/q" with optional leading '-'. Unreduced input such as
  /// "2/6" is accepted and canonicalized. Throws Errc::syntax_error on
  /// malformed text and Errc::division_by_zero on a zero denominator.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const {
    return boost::multiprecision::denominator(value_);
  }

  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  /// "p/q" in lowest terms; plain "p" when the value is an integer.
  std::string str() const;

  Rational operator-() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws on division by zero

  friend Rational operator+(Rational lhs, const Rational& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Rational operator-(Rational lhs, const Rational& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend Rational operator*(Rational lhs, const Rational& rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend Rational operator/(Rational lhs, const Rational& rhs) {
    lhs /= rhs;
    return lhs;
  }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs,
                                          const Rational& rhs) {
    if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
    if (lhs.value_ > rhs.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  using Backend = boost::multiprecision::cpp_rational;
  explicit Rational(Backend value) : value_(std::move(value)) {}

  Backend value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace roughprob
