#include "roughprob/measure.hpp"

namespace roughprob {

Rational lower_prob(const ApproximationSpace& space, const Event& a) {
  return space.measure().of(lower_inverse(space, a));
}

Rational upper_prob(const ApproximationSpace& space, const Event& a) {
  return space.measure().of(upper_inverse(space, a));
}

RoughPair rough_prob(const ApproximationSpace& space, const Event& a) {
  return RoughPair{lower_prob(space, a), upper_prob(space, a)};
}

Rational cond_lower(const ApproximationSpace& space, const Event& a,
                    const Event& b) {
  const Rational denom = lower_prob(space, b);
  if (denom.is_zero()) {
    throw Error(Errc::zero_conditioning_mass,
                "P_low(B) = 0 for B = " + b.str());
  }
  return lower_prob(space, a & b) / denom;
}

Rational cond_upper(const ApproximationSpace& space, const Event& a,
                    const Event& b) {
  const Rational denom = upper_prob(space, b);
  if (denom.is_zero()) {
    throw Error(Errc::zero_conditioning_mass,
                "P_up(B) = 0 for B = " + b.str());
  }
  return upper_prob(space, a & b) / denom;
}

}  // namespace roughprob
