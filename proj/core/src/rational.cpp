#include "roughprob/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace roughprob {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw Error(Errc::syntax_error,
                "bad rational '" + std::string(whole) + "': empty integer");
  }
  std::size_t start = 0;
  bool negative = false;
  if (text[0] == '-') {
    negative = true;
    start = 1;
  }
  if (start == text.size()) {
    throw Error(Errc::syntax_error,
                "bad rational '" + std::string(whole) + "': sign without digits");
  }
  BigInt value = 0;
  for (std::size_t i = start; i < text.size(); ++i) {
    const char c = text[i];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(Errc::syntax_error, "bad rational '" + std::string(whole) +
                                          "': unexpected character '" +
                                          std::string(1, c) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator.is_zero()) {
    throw Error(Errc::division_by_zero, "rational with zero denominator");
  }
  BigInt num = numerator;
  BigInt den = denominator;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const BigInt g = boost::multiprecision::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  value_ = Backend(num, den);
}

Rational Rational::parse(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text), BigInt(1));
  }
  if (text.find('/', slash + 1) != std::string_view::npos) {
    throw Error(Errc::syntax_error,
                "bad rational '" + std::string(text) + "': multiple '/'");
  }
  const BigInt num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-') {
    throw Error(Errc::syntax_error, "bad rational '" + std::string(text) +
                                        "': denominator must be positive");
  }
  const BigInt den = parse_integer(den_text, text);
  if (den.is_zero()) {
    throw Error(Errc::division_by_zero,
                "bad rational '" + std::string(text) + "': zero denominator");
  }
  return Rational(num, den);
}

std::string Rational::str() const {
  std::string out = numerator().str();
  if (!is_integer()) {
    out += '/';
    out += denominator().str();
  }
  return out;
}

Rational Rational::operator-() const { return Rational(Backend(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw Error(Errc::division_by_zero, "rational division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.str();
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::empty_universe: return "EmptyUniverse";
    case Errc::duplicate_element: return "DuplicateElement";
    case Errc::universe_too_large: return "UniverseTooLarge";
    case Errc::empty_image: return "EmptyImage";
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::unknown_name: return "UnknownName";
    case Errc::missing_value: return "MissingValue";
    case Errc::bad_measure: return "BadMeasure";
    case Errc::universe_mismatch: return "UniverseMismatch";
    case Errc::zero_conditioning_mass: return "ZeroConditioningMass";
    case Errc::domain_too_large: return "DomainTooLarge";
    case Errc::unknown_law: return "UnknownLaw";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::schema_error: return "SchemaError";
    case Errc::division_by_zero: return "DivisionByZero";
  }
  return "UnknownError";
}

}  // namespace roughprob
