#pragma once

#include <string>

#include "roughprob/rational.hpp"
#include "roughprob/space.hpp"

namespace roughprob {

/// Ordered (lower, upper) pair of exact values. Produced by rough
/// probability, where both components stay in [0, 1], and reused by the
/// distribution/expectation/variance operators, where the upper component
/// may exceed 1.
struct RoughPair {
  Rational lower;
  Rational upper;

  friend bool operator==(const RoughPair&, const RoughPair&) = default;

  std::string str() const {
    return "(" + lower.str() + ", " + upper.str() + ")";
  }
};

/// P_low(A) = P(T+(A)).
Rational lower_prob(const ApproximationSpace& space, const Event& a);

/// P_up(A) = P(T-1(A)).
Rational upper_prob(const ApproximationSpace& space, const Event& a);

/// P*(A) = (P_low(A), P_up(A)).
RoughPair rough_prob(const ApproximationSpace& space, const Event& a);

/// P_low(A|B) = P_low(A&B) / P_low(B). Defined only for P_low(B) != 0;
/// throws Errc::zero_conditioning_mass otherwise.
Rational cond_lower(const ApproximationSpace& space, const Event& a,
                    const Event& b);

/// P_up(A|B) = P_up(A&B) / P_up(B). Defined only for P_up(B) != 0.
Rational cond_upper(const ApproximationSpace& space, const Event& a,
                    const Event& b);

}  // namespace roughprob
