#pragma once

#include <map>
#include <string>
#include <vector>

#include "roughprob/measure.hpp"
#include "roughprob/space.hpp"

namespace roughprob {

/// Random variable on an approximation space, analyzed eagerly: distinct
/// values are sorted ascending into levels, each level carries its preimage
/// event and the lower/upper singleton masses P_low(U=u) and P_up(U=u).
class RoughVariable {
 public:
  RoughVariable(ApproximationSpace space, std::vector<Rational> values);

  const ApproximationSpace& space() const { return space_; }
  const Rational& value(std::size_t index) const { return value_[index]; }

  std::size_t level_count() const { return levels_.size(); }
  const std::vector<Rational>& levels() const { return levels_; }
  const Event& preimage(std::size_t k) const { return preimage_[k]; }
  const Rational& lower_mass(std::size_t k) const { return lower_mass_[k]; }
  const Rational& upper_mass(std::size_t k) const { return upper_mass_[k]; }

  /// c = sum of lower masses; always in [0, 1].
  const Rational& lower_mass_total() const { return lower_total_; }
  /// d = sum of upper masses; always in [1, n].
  const Rational& upper_mass_total() const { return upper_total_; }

  std::string str() const;  // "(1->1, 2->2, ...)" value assignment

 private:
  ApproximationSpace space_;
  std::vector<Rational> value_;
  std::vector<Rational> levels_;
  std::vector<Event> preimage_;
  std::vector<Rational> lower_mass_;
  std::vector<Rational> upper_mass_;
  Rational lower_total_;
  Rational upper_total_;
};

/// Builds a variable from a label-to-value assignment; every element must be
/// assigned (Errc::missing_value otherwise, Errc::unknown_label for strays).
RoughVariable build_variable(const ApproximationSpace& space,
                             const std::map<std::string, Rational>& values);

/// Index-addressed overload: values[i] is U at universe index i.
RoughVariable build_variable(const ApproximationSpace& space,
                             std::vector<Rational> values);

struct SingletonRow {
  Rational level;
  Rational lower;
  Rational upper;
};

/// One row per level, ascending: (u, P_low(U=u), P_up(U=u)).
std::vector<SingletonRow> singleton_table(const RoughVariable& var);

/// The two readings of the rough distribution function. `event` applies
/// P_low/P_up to the event {U <= u}, so both components stay in [0, 1].
/// `singleton_sum` accumulates per-level singleton masses; its upper
/// component is not capped and may exceed 1.
enum class CdfMode { singleton_sum, event };

/// F*(u) under the chosen mode.
RoughPair cdf(const RoughVariable& var, const Rational& u, CdfMode mode);

/// Step function view of one cdf component: `value` holds on [at, next.at);
/// the value before the first step is 0. Steps with no change are merged.
struct CdfStep {
  Rational at;
  Rational value;
};

struct CdfProfile {
  std::vector<CdfStep> lower;
  std::vector<CdfStep> upper;
};

CdfProfile cdf_profile(const RoughVariable& var, CdfMode mode);

/// E*(U) = (sum u_k P_low(U=u_k), sum u_k P_up(U=u_k)).
RoughPair expectation(const RoughVariable& var);

/// k-th raw moment pair (sum u^k times mass), k >= 1.
RoughPair raw_moment(const RoughVariable& var, unsigned k);

/// Closed-form affine expectation: (a E_low + b c, a E_up + b d) with the
/// original singleton masses kept fixed; equals the direct sums
/// sum (a u_k + b) mass_k by linearity.
RoughPair affine_expectation(const RoughVariable& var, const Rational& a,
                             const Rational& b);

/// V_low = sum (u_k - E_low)^2 P_low(U=u_k), V_up analogously about E_up.
RoughPair variance_direct(const RoughVariable& var);

/// Closed form: E_low(U^2) - (2-c) E_low(U)^2, and with d for the upper
/// component. Agrees with variance_direct exactly for every variable.
RoughPair variance_formula(const RoughVariable& var);

/// Closed form for the affine image aU+b, centered at the original
/// expectations: a^2 E(U^2) - (2a-c) E(U)^2 + 2b(a-c) E(U) + b^2 c (lower;
/// upper with d). Equals sum (a u_k + b - E)^2 mass_k exactly.
RoughPair affine_variance_formula(const RoughVariable& var, const Rational& a,
                                  const Rational& b);

}  // namespace roughprob
