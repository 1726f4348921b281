#include "roughprob/variable.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace roughprob {

RoughVariable::RoughVariable(ApproximationSpace space,
                             std::vector<Rational> values)
    : space_(std::move(space)), value_(std::move(values)) {
  if (value_.size() != space_.size()) {
    throw Error(Errc::missing_value, "variable must assign a value to every element");
  }

  levels_ = value_;
  std::sort(levels_.begin(), levels_.end());
  levels_.erase(std::unique(levels_.begin(), levels_.end()), levels_.end());

  preimage_.reserve(levels_.size());
  lower_mass_.reserve(levels_.size());
  upper_mass_.reserve(levels_.size());
  for (const Rational& level : levels_) {
    std::uint64_t bits = 0;
    for (std::size_t x = 0; x < value_.size(); ++x) {
      if (value_[x] == level) bits |= std::uint64_t{1} << x;
    }
    Event pre = space_.event(bits);
    lower_mass_.push_back(lower_prob(space_, pre));
    upper_mass_.push_back(upper_prob(space_, pre));
    lower_total_ += lower_mass_.back();
    upper_total_ += upper_mass_.back();
    preimage_.push_back(std::move(pre));
  }

  assert(lower_total_ <= Rational(1));
  assert(upper_total_ >= Rational(1));
  assert(upper_total_ <= Rational(static_cast<long long>(space_.size())));
}

std::string RoughVariable::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t x = 0; x < value_.size(); ++x) {
    if (x > 0) out << ", ";
    out << space_.universe()->label(x) << "->" << value_[x].str();
  }
  out << ")";
  return out.str();
}

RoughVariable build_variable(const ApproximationSpace& space,
                             const std::map<std::string, Rational>& values) {
  for (const auto& [label, value] : values) {
    space.universe()->index_of(label);
    (void)value;
  }
  std::vector<Rational> per_index(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    const auto it = values.find(space.universe()->label(x));
    if (it == values.end()) {
      throw Error(Errc::missing_value, "no value for element '" +
                                           space.universe()->label(x) + "'");
    }
    per_index[x] = it->second;
  }
  return RoughVariable(space, std::move(per_index));
}

RoughVariable build_variable(const ApproximationSpace& space,
                             std::vector<Rational> values) {
  return RoughVariable(space, std::move(values));
}

std::vector<SingletonRow> singleton_table(const RoughVariable& var) {
  std::vector<SingletonRow> rows;
  rows.reserve(var.level_count());
  for (std::size_t k = 0; k < var.level_count(); ++k) {
    rows.push_back({var.levels()[k], var.lower_mass(k), var.upper_mass(k)});
  }
  return rows;
}

RoughPair cdf(const RoughVariable& var, const Rational& u, CdfMode mode) {
  if (mode == CdfMode::event) {
    std::uint64_t bits = 0;
    for (std::size_t x = 0; x < var.space().size(); ++x) {
      if (var.value(x) <= u) bits |= std::uint64_t{1} << x;
    }
    const Event below = var.space().event(bits);
    return RoughPair{lower_prob(var.space(), below),
                     upper_prob(var.space(), below)};
  }
  RoughPair out;
  for (std::size_t k = 0; k < var.level_count() && var.levels()[k] <= u; ++k) {
    out.lower += var.lower_mass(k);
    out.upper += var.upper_mass(k);
  }
  return out;
}

CdfProfile cdf_profile(const RoughVariable& var, CdfMode mode) {
  CdfProfile profile;
  Rational last_lower, last_upper;
  for (const Rational& level : var.levels()) {
    const RoughPair at = cdf(var, level, mode);
    if (at.lower != last_lower) {
      profile.lower.push_back({level, at.lower});
      last_lower = at.lower;
    }
    if (at.upper != last_upper) {
      profile.upper.push_back({level, at.upper});
      last_upper = at.upper;
    }
  }
  return profile;
}

RoughPair expectation(const RoughVariable& var) {
  RoughPair out;
  for (std::size_t k = 0; k < var.level_count(); ++k) {
    out.lower += var.levels()[k] * var.lower_mass(k);
    out.upper += var.levels()[k] * var.upper_mass(k);
  }
  return out;
}

RoughPair raw_moment(const RoughVariable& var, unsigned k) {
  if (k == 0) {
    throw std::invalid_argument("raw_moment requires k >= 1");
  }
  RoughPair out;
  for (std::size_t i = 0; i < var.level_count(); ++i) {
    Rational power = var.levels()[i];
    for (unsigned j = 1; j < k; ++j) power *= var.levels()[i];
    out.lower += power * var.lower_mass(i);
    out.upper += power * var.upper_mass(i);
  }
  return out;
}

RoughPair affine_expectation(const RoughVariable& var, const Rational& a,
                             const Rational& b) {
  const RoughPair e = expectation(var);
  return RoughPair{a * e.lower + b * var.lower_mass_total(),
                   a * e.upper + b * var.upper_mass_total()};
}

RoughPair variance_direct(const RoughVariable& var) {
  const RoughPair e = expectation(var);
  RoughPair out;
  for (std::size_t k = 0; k < var.level_count(); ++k) {
    const Rational dl = var.levels()[k] - e.lower;
    const Rational du = var.levels()[k] - e.upper;
    out.lower += dl * dl * var.lower_mass(k);
    out.upper += du * du * var.upper_mass(k);
  }
  return out;
}

RoughPair variance_formula(const RoughVariable& var) {
  const RoughPair e = expectation(var);
  const RoughPair m2 = raw_moment(var, 2);
  const Rational two(2);
  return RoughPair{
      m2.lower - (two - var.lower_mass_total()) * e.lower * e.lower,
      m2.upper - (two - var.upper_mass_total()) * e.upper * e.upper};
}

RoughPair affine_variance_formula(const RoughVariable& var, const Rational& a,
                                  const Rational& b) {
  const RoughPair e = expectation(var);
  const RoughPair m2 = raw_moment(var, 2);
  const Rational& c = var.lower_mass_total();
  const Rational& d = var.upper_mass_total();
  const Rational two(2);
  const Rational a2 = a * a;
  const Rational b2 = b * b;
  return RoughPair{a2 * m2.lower - (two * a - c) * e.lower * e.lower +
                       two * b * (a - c) * e.lower + b2 * c,
                   a2 * m2.upper - (two * a - d) * e.upper * e.upper +
                       two * b * (a - d) * e.upper + b2 * d};
}

}  // namespace roughprob
