#include "roughprob/laws.hpp"

#include <algorithm>
#include <cassert>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace roughprob {

namespace {

constexpr LawInfo kCatalog[] = {
    {LawId::p2_1_1, "P2.1.1", "P_low(empty) = P_up(empty) = 0",
     LawKind::space, false},
    {LawId::p2_1_2, "P2.1.2", "P_low(X) = P_up(X) = 1", LawKind::space, false},
    {LawId::p2_1_3, "P2.1.3",
     "upper probability is subadditive across unions", LawKind::event2, false},
    {LawId::p2_1_4, "P2.1.4",
     "lower probability is superadditive across unions", LawKind::event2,
     false},
    {LawId::p2_1_5, "P2.1.5", "P_low(complement A) = 1 - P_up(A)",
     LawKind::event1, false},
    {LawId::p2_1_6, "P2.1.6", "P_low(A - B) <= P_low(A) - P_low(A intersect B)",
     LawKind::event2, false},
    {LawId::p2_1_7, "P2.1.7", "P_low(A) <= P_up(A)", LawKind::event1, false},
    {LawId::p2_1_8, "P2.1.8", "both probabilities are monotone under inclusion",
     LawKind::event2, false},
    {LawId::l2_3_1, "L2.3.1",
     "reflexive maps sandwich P between P_low and P_up", LawKind::event1,
     false},
    {LawId::l2_3_2, "L2.3.2",
     "reflexive+transitive maps fix the approximation masses", LawKind::event1,
     false},
    {LawId::l2_3_3, "L2.3.3", "exact events collapse the rough pair to P",
     LawKind::event1, false},
    {LawId::l2_6_1, "L2.6.1", "conditioning an event on itself gives 1",
     LawKind::event1, false},
    {LawId::l2_6_2, "L2.6.2", "conditioning the empty event gives 0",
     LawKind::event1, false},
    {LawId::l2_6_3, "L2.6.3", "conditioning on X is a no-op", LawKind::event1,
     false},
    {LawId::l2_6_4, "L2.6.4",
     "lower conditional of the complement is dominated", LawKind::event2,
     false},
    {LawId::l2_6_5, "L2.6.5",
     "lower conditionals are superadditive across unions", LawKind::event3,
     false},
    {LawId::l2_6_6, "L2.6.6", "upper conditional of the complement dominates",
     LawKind::event2, false},
    {LawId::l2_6_7, "L2.6.7",
     "upper conditionals are subadditive across unions", LawKind::event3,
     false},
    {LawId::l2_6_8, "L2.6.8", "lower total-probability bound over partitions",
     LawKind::partition, false},
    {LawId::l2_6_9, "L2.6.9", "upper total-probability bound over partitions",
     LawKind::partition, false},
    {LawId::l2_6_10, "L2.6.10",
     "conditionals on exact events sandwich the classical conditional",
     LawKind::event2, false},
    {LawId::t2_14, "T2.14", "E_low(aU+b) = a E_low(U) + b c", LawKind::affine,
     false},
    {LawId::t2_15, "T2.15", "E_up(aU+b) = a E_up(U) + b d", LawKind::affine,
     false},
    {LawId::t2_18, "T2.18", "V_low(U) = E_low(U^2) - (2-c) E_low(U)^2",
     LawKind::variable, false},
    {LawId::t2_19, "T2.19", "V_up(U) = E_up(U^2) - (2-d) E_up(U)^2",
     LawKind::variable, false},
    {LawId::t2_20, "T2.20", "closed form for V_low(aU+b)", LawKind::affine,
     false},
    {LawId::t2_21, "T2.21", "closed form for V_up(aU+b)", LawKind::affine,
     false},
    {LawId::dual, "DUAL", "T+(complement A) = complement T-1(A)",
     LawKind::event1, false},
    {LawId::idempotent, "IDEMPOTENT",
     "reflexive+transitive maps make both operators idempotent",
     LawKind::event1, false},
    {LawId::monotone, "MONOTONE", "both operators are monotone under inclusion",
     LawKind::event2, false},
    {LawId::contain, "CONTAIN", "T+(A) subset of T-1(A)", LawKind::event1,
     false},
};

constexpr LawInfo kControls[] = {
    {LawId::cover_control, "L2.6.8-cover",
     "partition bound quantified over covers; false, overlapping blocks "
     "double-count",
     LawKind::cover, true},
    {LawId::superadd_control, "FAB-SUPERADD",
     "fabricated: P_up superadditive across unions; false", LawKind::event2,
     true},
    {LawId::asstated_control, "L2.6.10-noreflexive",
     "exact-conditional sandwich without the reflexivity guard; false",
     LawKind::event2, true},
};

CheckResult pass_result() { return {}; }

CheckResult vacuous_result() {
  CheckResult r;
  r.verdict = Verdict::vacuous;
  return r;
}

CheckResult violated(std::string clause, std::string lhs, std::string rhs) {
  CheckResult r;
  r.verdict = Verdict::violated;
  r.clause = std::move(clause);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::span<const LawInfo> law_catalog() { return kCatalog; }

std::span<const LawInfo> control_laws() { return kControls; }

const LawInfo& law_info(LawId id) {
  for (const LawInfo& info : kCatalog) {
    if (info.id == id) return info;
  }
  for (const LawInfo& info : kControls) {
    if (info.id == id) return info;
  }
  throw Error(Errc::unknown_law, "law id out of range");
}

LawId parse_law(std::string_view name) {
  for (const LawInfo& info : kCatalog) {
    if (info.name == name) return info.id;
  }
  for (const LawInfo& info : kControls) {
    if (info.name == name) return info.id;
  }
  throw Error(Errc::unknown_law, "unknown law '" + std::string(name) + "'");
}

LawChecker::LawChecker(const ApproximationSpace& space)
    : space_(space),
      full_(space.universe()->full_mask()),
      reflexive_(is_reflexive(space)),
      transitive_(is_transitive(space)) {
  // Full tables stay affordable only for small universes; larger spaces fall
  // back to per-query evaluation.
  if (space_.size() <= 10) {
    const std::size_t count = std::size_t{1} << space_.size();
    table_.resize(count);
    for (std::uint64_t a = 0; a < count; ++a) {
      std::uint64_t plus = 0;
      std::uint64_t minus = 0;
      for (std::size_t x = 0; x < space_.size(); ++x) {
        const std::uint64_t image = space_.map().image_bits(x);
        if ((image & ~a) == 0) plus |= std::uint64_t{1} << x;
        if ((image & a) != 0) minus |= std::uint64_t{1} << x;
      }
      table_[a].t_plus = plus;
      table_[a].t_minus = minus;
      Rational mass;
      for (std::size_t x = 0; x < space_.size(); ++x) {
        if ((a >> x) & 1) mass += space_.measure().weight(x);
      }
      table_[a].p = std::move(mass);
    }
    for (std::uint64_t a = 0; a < count; ++a) {
      table_[a].p_low = table_[table_[a].t_plus].p;
      table_[a].p_up = table_[table_[a].t_minus].p;
    }
  }
}

std::uint64_t LawChecker::t_plus(std::uint64_t a) const {
  if (!table_.empty()) return table_[a].t_plus;
  std::uint64_t bits = 0;
  for (std::size_t x = 0; x < space_.size(); ++x) {
    if ((space_.map().image_bits(x) & ~a) == 0) bits |= std::uint64_t{1} << x;
  }
  return bits;
}

std::uint64_t LawChecker::t_minus(std::uint64_t a) const {
  if (!table_.empty()) return table_[a].t_minus;
  std::uint64_t bits = 0;
  for (std::size_t x = 0; x < space_.size(); ++x) {
    if ((space_.map().image_bits(x) & a) != 0) bits |= std::uint64_t{1} << x;
  }
  return bits;
}

Rational LawChecker::p(std::uint64_t a) const {
  if (!table_.empty()) return table_[a].p;
  Rational mass;
  for (std::size_t x = 0; x < space_.size(); ++x) {
    if ((a >> x) & 1) mass += space_.measure().weight(x);
  }
  return mass;
}

Rational LawChecker::p_low(std::uint64_t a) const {
  if (!table_.empty()) return table_[a].p_low;
  return p(t_plus(a));
}

Rational LawChecker::p_up(std::uint64_t a) const {
  if (!table_.empty()) return table_[a].p_up;
  return p(t_minus(a));
}

bool LawChecker::exact(std::uint64_t a) const {
  return t_plus(a) == a && t_minus(a) == a;
}

CheckResult LawChecker::check(LawId law, const LawInput& in) const {
  const LawInfo& info = law_info(law);

  const auto arity = [&]() -> std::size_t {
    switch (info.kind) {
      case LawKind::space: return 0;
      case LawKind::event1: return 1;
      case LawKind::event2: return 2;
      case LawKind::event3: return 3;
      case LawKind::partition:
      case LawKind::cover: return 1;
      case LawKind::variable:
      case LawKind::affine: return 0;
    }
    return 0;
  }();
  if (in.events.size() < arity) {
    throw std::invalid_argument("law " + std::string(info.name) + " needs " +
                                std::to_string(arity) + " event(s)");
  }
  for (const Event& e : in.events) {
    if (!same_universe(space_.universe(), e.universe())) {
      throw Error(Errc::universe_mismatch,
                  "law input event belongs to a different universe");
    }
  }
  for (const Event& e : in.blocks) {
    if (!same_universe(space_.universe(), e.universe())) {
      throw Error(Errc::universe_mismatch,
                  "law input block belongs to a different universe");
    }
  }
  if ((info.kind == LawKind::variable || info.kind == LawKind::affine)) {
    if (in.variable == nullptr) {
      throw std::invalid_argument("law " + std::string(info.name) +
                                  " needs a variable");
    }
    if (!same_universe(space_.universe(), in.variable->space().universe())) {
      throw Error(Errc::universe_mismatch,
                  "law input variable belongs to a different universe");
    }
  }

  const auto ev = [&](std::size_t i) { return in.events[i].bits(); };
  const auto set_str = [&](std::uint64_t bits) {
    return Event(space_.universe(), bits).str();
  };
  const Rational one(1);

  switch (law) {
    case LawId::p2_1_1: {
      const Rational low = p_low(0);
      if (!low.is_zero())
        return violated("P_low(empty) = 0", low.str(), "0");
      const Rational up = p_up(0);
      if (!up.is_zero()) return violated("P_up(empty) = 0", up.str(), "0");
      return pass_result();
    }
    case LawId::p2_1_2: {
      const Rational low = p_low(full_);
      if (low != one) return violated("P_low(X) = 1", low.str(), "1");
      const Rational up = p_up(full_);
      if (up != one) return violated("P_up(X) = 1", up.str(), "1");
      return pass_result();
    }
    case LawId::p2_1_3: {
      const std::uint64_t a = ev(0), b = ev(1);
      const Rational lhs = p_up(a | b);
      const Rational rhs = p_up(a) + p_up(b) - p_up(a & b);
      if (!(lhs <= rhs))
        return violated(
            "P_up(A union B) <= P_up(A) + P_up(B) - P_up(A intersect B)",
            lhs.str(), rhs.str());
      return pass_result();
    }
    case LawId::p2_1_4: {
      const std::uint64_t a = ev(0), b = ev(1);
      const Rational lhs = p_low(a | b);
      const Rational rhs = p_low(a) + p_low(b) - p_low(a & b);
      if (!(lhs >= rhs))
        return violated(
            "P_low(A union B) >= P_low(A) + P_low(B) - P_low(A intersect B)",
            lhs.str(), rhs.str());
      return pass_result();
    }
    case LawId::p2_1_5: {
      const std::uint64_t a = ev(0);
      const Rational lhs = p_low(~a & full_);
      const Rational rhs = one - p_up(a);
      if (lhs != rhs)
        return violated("P_low(complement A) = 1 - P_up(A)", lhs.str(),
                        rhs.str());
      return pass_result();
    }
    case LawId::p2_1_6: {
      const std::uint64_t a = ev(0), b = ev(1);
      const Rational lhs = p_low(a & ~b);
      const Rational rhs = p_low(a) - p_low(a & b);
      if (!(lhs <= rhs))
        return violated("P_low(A - B) <= P_low(A) - P_low(A intersect B)",
                        lhs.str(), rhs.str());
      return pass_result();
    }
    case LawId::p2_1_7: {
      const std::uint64_t a = ev(0);
      const Rational lhs = p_low(a), rhs = p_up(a);
      if (!(lhs <= rhs))
        return violated("P_low(A) <= P_up(A)", lhs.str(), rhs.str());
      return pass_result();
    }
    case LawId::p2_1_8: {
      const std::uint64_t a = ev(0), b = ev(1);
      if ((a & ~b) != 0) return vacuous_result();
      if (!(p_low(a) <= p_low(b)))
        return violated("P_low(A) <= P_low(B)", p_low(a).str(),
                        p_low(b).str());
      if (!(p_up(a) <= p_up(b)))
        return violated("P_up(A) <= P_up(B)", p_up(a).str(), p_up(b).str());
      return pass_result();
    }
    case LawId::l2_3_1: {
      if (!reflexive_) return vacuous_result();
      const std::uint64_t a = ev(0);
      if (!(p_low(a) <= p(a)))
        return violated("P_low(A) <= P(A)", p_low(a).str(), p(a).str());
      if (!(p(a) <= p_up(a)))
        return violated("P(A) <= P_up(A)", p(a).str(), p_up(a).str());
      return pass_result();
    }
    case LawId::l2_3_2: {
      if (!reflexive_ || !transitive_) return vacuous_result();
      const std::uint64_t a = ev(0);
      const Rational ll = p_low(t_plus(a)), lr = p_low(a);
      if (ll != lr)
        return violated("P_low(T+(A)) = P_low(A)", ll.str(), lr.str());
      const Rational ul = p_up(t_minus(a)), ur = p_up(a);
      if (ul != ur)
        return violated("P_up(T-1(A)) = P_up(A)", ul.str(), ur.str());
      return pass_result();
    }
    case LawId::l2_3_3: {
      const std::uint64_t a = ev(0);
      if (!exact(a)) return vacuous_result();
      if (p_low(a) != p(a))
        return violated("P_low(A) = P(A)", p_low(a).str(), p(a).str());
      if (p(a) != p_up(a))
        return violated("P(A) = P_up(A)", p(a).str(), p_up(a).str());
      return pass_result();
    }
    case LawId::l2_6_1: {
      const std::uint64_t a = ev(0);
      const Rational low = p_low(a), up = p_up(a);
      if (low.is_zero() && up.is_zero()) return vacuous_result();
      if (!low.is_zero()) {
        const Rational value = p_low(a & a) / low;
        if (value != one)
          return violated("P_low(A|A) = 1", value.str(), "1");
      }
      if (!up.is_zero()) {
        const Rational value = p_up(a & a) / up;
        if (value != one) return violated("P_up(A|A) = 1", value.str(), "1");
      }
      return pass_result();
    }
    case LawId::l2_6_2: {
      const std::uint64_t a = ev(0);
      const Rational low = p_low(a), up = p_up(a);
      if (low.is_zero() && up.is_zero()) return vacuous_result();
      if (!low.is_zero()) {
        const Rational value = p_low(0) / low;
        if (!value.is_zero())
          return violated("P_low(empty|A) = 0", value.str(), "0");
      }
      if (!up.is_zero()) {
        const Rational value = p_up(0) / up;
        if (!value.is_zero())
          return violated("P_up(empty|A) = 0", value.str(), "0");
      }
      return pass_result();
    }
    case LawId::l2_6_3: {
      const std::uint64_t a = ev(0);
      const Rational ll = p_low(a & full_) / p_low(full_);
      if (ll != p_low(a))
        return violated("P_low(A|X) = P_low(A)", ll.str(), p_low(a).str());
      const Rational ul = p_up(a & full_) / p_up(full_);
      if (ul != p_up(a))
        return violated("P_up(A|X) = P_up(A)", ul.str(), p_up(a).str());
      return pass_result();
    }
    case LawId::l2_6_4: {
      const std::uint64_t a = ev(0), b = ev(1);
      const Rational denom = p_low(b);
      if (denom.is_zero()) return vacuous_result();
      const Rational lhs = p_low(~a & full_ & b) / denom;
      const Rational rhs = one - p_low(a & b) / denom;
      if (!(lhs <= rhs))
        return violated("P_low(complement A|B) <= 1 - P_low(A|B)", lhs.str(),
                        rhs.str());
      return pass_result();
    }
    case LawId::l2_6_5: {
      const std::uint64_t a = ev(0), b = ev(1), c = ev(2);
      const Rational denom = p_low(c);
      if (denom.is_zero()) return vacuous_result();
      const Rational lhs = p_low((a | b) & c) / denom;
      const Rational rhs = p_low(a & c) / denom + p_low(b & c) / denom -
                           p_low(a & b & c) / denom;
      if (!(lhs >= rhs))
        return violated(
            "P_low(A union B|C) >= P_low(A|C) + P_low(B|C) - "
            "P_low(A intersect B|C)",
            lhs.str(), rhs.str());
      return pass_result();
    }
    case LawId::l2_6_6: {
      const std::uint64_t a = ev(0), b = ev(1);
      const Rational denom = p_up(b);
      if (denom.is_zero()) return vacuous_result();
      const Rational lhs = p_up(~a & full_ & b) / denom;
      const Rational rhs = one - p_up(a & b) / denom;
      if (!(lhs >= rhs))
        return violated("P_up(complement A|B) >= 1 - P_up(A|B)", lhs.str(),
                        rhs.str());
      return pass_result();
    }
    case LawId::l2_6_7: {
      const std::uint64_t a = ev(0), b = ev(1), c = ev(2);
      const Rational denom = p_up(c);
      if (denom.is_zero()) return vacuous_result();
      const Rational lhs = p_up((a | b) & c) / denom;
      const Rational rhs =
          p_up(a & c) / denom + p_up(b & c) / denom - p_up(a & b & c) / denom;
      if (!(lhs <= rhs))
        return violated(
            "P_up(A union B|C) <= P_up(A|C) + P_up(B|C) - "
            "P_up(A intersect B|C)",
            lhs.str(), rhs.str());
      return pass_result();
    }
    case LawId::l2_6_8:
    case LawId::cover_control: {
      const std::uint64_t a = ev(0);
      Rational sum;
      for (const Event& block : in.blocks) {
        const Rational mass = p_low(block.bits());
        if (mass.is_zero()) return vacuous_result();
        sum += p_low(a & block.bits()) / mass * mass;
      }
      const Rational lhs = p_low(a);
      if (!(lhs >= sum))
        return violated("P_low(A) >= sum P_low(A|B_i) P_low(B_i)", lhs.str(),
                        sum.str());
      return pass_result();
    }
    case LawId::l2_6_9: {
      const std::uint64_t a = ev(0);
      Rational sum;
      for (const Event& block : in.blocks) {
        const Rational mass = p_up(block.bits());
        if (mass.is_zero()) return vacuous_result();
        sum += p_up(a & block.bits()) / mass * mass;
      }
      const Rational lhs = p_up(a);
      if (!(lhs <= sum))
        return violated("P_up(A) <= sum P_up(A|B_i) P_up(B_i)", lhs.str(),
                        sum.str());
      return pass_result();
    }
    case LawId::l2_6_10:
    case LawId::asstated_control: {
      const std::uint64_t a = ev(0), b = ev(1);
      // The sandwich needs reflexivity on top of the transitive+exact
      // hypotheses; the as-stated control drops it and is expected to fail.
      if (law == LawId::l2_6_10 && !reflexive_) return vacuous_result();
      if (!transitive_ || !exact(b)) return vacuous_result();
      const Rational pb = p(b);
      if (pb.is_zero()) return vacuous_result();
      const Rational classical = p(a & b) / pb;
      const Rational low = p_low(a & b) / p_low(b);
      if (!(low <= classical))
        return violated("P_low(A|B) <= P(A|B)", low.str(), classical.str());
      const Rational up = p_up(a & b) / p_up(b);
      if (!(classical <= up))
        return violated("P(A|B) <= P_up(A|B)", classical.str(), up.str());
      return pass_result();
    }
    case LawId::t2_14: {
      const RoughVariable& var = *in.variable;
      Rational direct;
      for (std::size_t k = 0; k < var.level_count(); ++k) {
        direct += (in.a * var.levels()[k] + in.b) * var.lower_mass(k);
      }
      const Rational closed = in.a * expectation(var).lower +
                              in.b * var.lower_mass_total();
      if (direct != closed)
        return violated("E_low(aU+b) = a E_low(U) + b c", direct.str(),
                        closed.str());
      return pass_result();
    }
    case LawId::t2_15: {
      const RoughVariable& var = *in.variable;
      Rational direct;
      for (std::size_t k = 0; k < var.level_count(); ++k) {
        direct += (in.a * var.levels()[k] + in.b) * var.upper_mass(k);
      }
      const Rational closed =
          in.a * expectation(var).upper + in.b * var.upper_mass_total();
      if (direct != closed)
        return violated("E_up(aU+b) = a E_up(U) + b d", direct.str(),
                        closed.str());
      return pass_result();
    }
    case LawId::t2_18: {
      const RoughVariable& var = *in.variable;
      const Rational direct = variance_direct(var).lower;
      const Rational closed = variance_formula(var).lower;
      if (direct != closed)
        return violated("V_low(U) = E_low(U^2) - (2-c) E_low(U)^2",
                        direct.str(), closed.str());
      return pass_result();
    }
    case LawId::t2_19: {
      const RoughVariable& var = *in.variable;
      const Rational direct = variance_direct(var).upper;
      const Rational closed = variance_formula(var).upper;
      if (direct != closed)
        return violated("V_up(U) = E_up(U^2) - (2-d) E_up(U)^2", direct.str(),
                        closed.str());
      return pass_result();
    }
    case LawId::t2_20: {
      const RoughVariable& var = *in.variable;
      const Rational center = expectation(var).lower;
      Rational direct;
      for (std::size_t k = 0; k < var.level_count(); ++k) {
        const Rational dev = in.a * var.levels()[k] + in.b - center;
        direct += dev * dev * var.lower_mass(k);
      }
      const Rational closed = affine_variance_formula(var, in.a, in.b).lower;
      if (direct != closed)
        return violated(
            "V_low(aU+b) = a^2 E_low(U^2) - (2a-c) E_low(U)^2 + "
            "2b(a-c) E_low(U) + b^2 c",
            direct.str(), closed.str());
      return pass_result();
    }
    case LawId::t2_21: {
      const RoughVariable& var = *in.variable;
      const Rational center = expectation(var).upper;
      Rational direct;
      for (std::size_t k = 0; k < var.level_count(); ++k) {
        const Rational dev = in.a * var.levels()[k] + in.b - center;
        direct += dev * dev * var.upper_mass(k);
      }
      const Rational closed = affine_variance_formula(var, in.a, in.b).upper;
      if (direct != closed)
        return violated(
            "V_up(aU+b) = a^2 E_up(U^2) - (2a-d) E_up(U)^2 + "
            "2b(a-d) E_up(U) + b^2 d",
            direct.str(), closed.str());
      return pass_result();
    }
    case LawId::dual: {
      const std::uint64_t a = ev(0);
      const std::uint64_t lhs = t_plus(~a & full_);
      const std::uint64_t rhs = ~t_minus(a) & full_;
      if (lhs != rhs)
        return violated("T+(complement A) = complement T-1(A)", set_str(lhs),
                        set_str(rhs));
      return pass_result();
    }
    case LawId::idempotent: {
      if (!reflexive_ || !transitive_) return vacuous_result();
      const std::uint64_t a = ev(0);
      const std::uint64_t minus1 = t_minus(a);
      if (t_minus(minus1) != minus1)
        return violated("T-1(T-1(A)) = T-1(A)", set_str(t_minus(minus1)),
                        set_str(minus1));
      const std::uint64_t plus1 = t_plus(a);
      if (t_plus(plus1) != plus1)
        return violated("T+(T+(A)) = T+(A)", set_str(t_plus(plus1)),
                        set_str(plus1));
      return pass_result();
    }
    case LawId::monotone: {
      const std::uint64_t a = ev(0), b = ev(1);
      if ((a & ~b) != 0) return vacuous_result();
      if ((t_plus(a) & ~t_plus(b)) != 0)
        return violated("T+(A) subset T+(B)", set_str(t_plus(a)),
                        set_str(t_plus(b)));
      if ((t_minus(a) & ~t_minus(b)) != 0)
        return violated("T-1(A) subset T-1(B)", set_str(t_minus(a)),
                        set_str(t_minus(b)));
      return pass_result();
    }
    case LawId::contain: {
      const std::uint64_t a = ev(0);
      if ((t_plus(a) & ~t_minus(a)) != 0)
        return violated("T+(A) subset T-1(A)", set_str(t_plus(a)),
                        set_str(t_minus(a)));
      return pass_result();
    }
    case LawId::superadd_control: {
      const std::uint64_t a = ev(0), b = ev(1);
      const Rational lhs = p_up(a | b);
      const Rational rhs = p_up(a) + p_up(b);
      if (!(lhs >= rhs))
        return violated("P_up(A union B) >= P_up(A) + P_up(B)", lhs.str(),
                        rhs.str());
      return pass_result();
    }
  }
  throw Error(Errc::unknown_law, "law id out of range");
}

CheckResult check_law(LawId law, const ApproximationSpace& space,
                      const LawInput& input) {
  return LawChecker(space).check(law, input);
}

CheckResult check_law(LawId law, const ApproximationSpace& space,
                      std::span<const Event> events) {
  LawInput input;
  input.events.assign(events.begin(), events.end());
  return check_law(law, space, input);
}

CheckResult check_law(LawId law, const ApproximationSpace& space,
                      const Event& a, std::span<const Event> blocks) {
  LawInput input;
  input.events.push_back(a);
  input.blocks.assign(blocks.begin(), blocks.end());
  return check_law(law, space, input);
}

CheckResult check_law(LawId law, const ApproximationSpace& space,
                      const RoughVariable& var, const Rational& a,
                      const Rational& b) {
  LawInput input;
  input.variable = &var;
  input.a = a;
  input.b = b;
  return check_law(law, space, input);
}

std::uint64_t map_count(int n) {
  const std::uint64_t images = (std::uint64_t{1} << n) - 1;
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) count *= images;
  return count;
}

namespace {

std::vector<Rational> random_weights(std::size_t n, std::uint64_t seed,
                                     std::uint64_t ordinal) {
  std::uint64_t state = seed ^ ((ordinal + 1) * 0x9E3779B97F4A7C15ull);
  std::vector<long long> raw(n);
  long long sum = 0;
  do {
    sum = 0;
    for (std::size_t x = 0; x < n; ++x) {
      raw[x] = static_cast<long long>(splitmix64(state) % 5);
      sum += raw[x];
    }
  } while (sum == 0);
  std::vector<Rational> weights;
  weights.reserve(n);
  for (std::size_t x = 0; x < n; ++x) weights.emplace_back(raw[x], sum);
  return weights;
}

}  // namespace

std::vector<ApproximationSpace> enumerate_spaces(
    int n, std::span<const std::uint64_t> seeds, bool allow_large) {
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  const int limit = allow_large ? 4 : 3;
  if (n > limit) {
    throw Error(Errc::domain_too_large,
                "exhaustive enumeration supports n <= " +
                    std::to_string(limit) + ", got n = " + std::to_string(n));
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  const UniversePtr universe = Universe::make(std::move(labels));

  const std::uint64_t images = (std::uint64_t{1} << n) - 1;
  const std::uint64_t maps = map_count(n);
  std::vector<ApproximationSpace> spaces;
  spaces.reserve(maps * (1 + seeds.size()));

  for (std::uint64_t index = 0; index < maps; ++index) {
    std::vector<std::uint64_t> image_bits(n);
    std::uint64_t rest = index;
    for (int x = 0; x < n; ++x) {
      image_bits[x] = rest % images + 1;
      rest /= images;
    }
    SetValuedMap map = SetValuedMap::from_bits(universe, image_bits);
    spaces.emplace_back(universe, map, ProbabilityMeasure::uniform(universe));
    for (const std::uint64_t seed : seeds) {
      spaces.emplace_back(
          universe, map,
          ProbabilityMeasure::make(universe,
                                   random_weights(n, seed, index)));
    }
  }
  return spaces;
}

std::vector<std::vector<Event>> set_partitions(const UniversePtr& universe) {
  const std::size_t n = universe->size();
  if (n > 12) {
    throw Error(Errc::domain_too_large,
                "partition enumeration supports at most 12 elements");
  }
  std::vector<std::vector<Event>> out;
  std::vector<std::size_t> assignment(n, 0);

  // Restricted growth strings: assignment[i] <= max(assignment[0..i-1]) + 1.
  const auto emit = [&] {
    const std::size_t blocks =
        *std::max_element(assignment.begin(), assignment.end()) + 1;
    std::vector<std::uint64_t> bits(blocks, 0);
    for (std::size_t i = 0; i < n; ++i) {
      bits[assignment[i]] |= std::uint64_t{1} << i;
    }
    std::vector<Event> partition;
    partition.reserve(blocks);
    for (const std::uint64_t b : bits) partition.emplace_back(universe, b);
    out.push_back(std::move(partition));
  };

  const auto recurse = [&](auto&& self, std::size_t pos,
                           std::size_t max_used) -> void {
    if (pos == n) {
      emit();
      return;
    }
    for (std::size_t value = 0; value <= max_used + 1; ++value) {
      assignment[pos] = value;
      self(self, pos + 1, std::max(max_used, value));
    }
  };

  if (n == 1) {
    emit();
  } else {
    recurse(recurse, 1, 0);
  }
  return out;
}

RoughVariable identity_variable(const ApproximationSpace& space) {
  std::vector<Rational> values;
  values.reserve(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    values.emplace_back(static_cast<long long>(x + 1));
  }
  return build_variable(space, std::move(values));
}

namespace {

std::vector<RoughVariable> sweep_variables(const ApproximationSpace& space,
                                           std::uint64_t tag, int extra) {
  std::vector<RoughVariable> vars;
  vars.reserve(1 + extra);
  vars.push_back(identity_variable(space));
  std::uint64_t state = 0x5851F42D4C957F2Dull ^ (tag * 0x9E3779B97F4A7C15ull);
  for (int j = 0; j < extra; ++j) {
    std::vector<Rational> values;
    values.reserve(space.size());
    for (std::size_t x = 0; x < space.size(); ++x) {
      values.emplace_back(static_cast<long long>(splitmix64(state) % 6) - 2);
    }
    vars.push_back(build_variable(space, std::move(values)));
  }
  return vars;
}

std::string render_events(const LawInput& in) {
  static constexpr const char* kNames[] = {"A", "B", "C"};
  std::string out;
  for (std::size_t i = 0; i < in.events.size() && i < 3; ++i) {
    if (i > 0) out += "; ";
    out += kNames[i];
    out += '=';
    out += in.events[i].str();
  }
  return out;
}

std::string render_blocks(std::string_view label, const LawInput& in) {
  std::string out = render_events(in);
  out += "; ";
  out += label;
  out += "=[";
  for (std::size_t i = 0; i < in.blocks.size(); ++i) {
    if (i > 0) out += ", ";
    out += in.blocks[i].str();
  }
  out += ']';
  return out;
}

std::string render_input(const LawInfo& info, const LawInput& in) {
  switch (info.kind) {
    case LawKind::space:
      return "";
    case LawKind::event1:
    case LawKind::event2:
    case LawKind::event3:
      return render_events(in);
    case LawKind::partition:
      return render_blocks("partition", in);
    case LawKind::cover:
      return render_blocks("cover", in);
    case LawKind::variable:
      return "U=" + in.variable->str();
    case LawKind::affine:
      return "U=" + in.variable->str() + "; a=" + in.a.str() +
             "; b=" + in.b.str();
  }
  return "";
}

std::vector<std::vector<Event>> two_block_covers(const UniversePtr& universe) {
  const std::uint64_t full = universe->full_mask();
  std::vector<std::vector<Event>> covers;
  for (std::uint64_t b1 = 1; b1 <= full; ++b1) {
    for (std::uint64_t b2 = b1; b2 <= full; ++b2) {
      if ((b1 | b2) != full) continue;
      covers.push_back({Event(universe, b1), Event(universe, b2)});
    }
  }
  return covers;
}

}  // namespace

std::vector<LawReport> run_suite(const SuiteConfig& config) {
  if (config.n_max < 1) {
    throw std::invalid_argument("suite needs n_max >= 1");
  }

  std::vector<const LawInfo*> active;
  for (const LawInfo& info : kCatalog) active.push_back(&info);
  for (const LawInfo& info : kControls) {
    const bool enabled =
        (info.id == LawId::cover_control && config.include_cover_variant) ||
        (info.id != LawId::cover_control && config.include_negative_controls);
    if (enabled) active.push_back(&info);
  }

  std::vector<LawReport> reports;
  reports.reserve(active.size());
  for (const LawInfo* info : active) reports.push_back(LawReport{info->id});

  using Clock = std::chrono::steady_clock;

  for (int n = 1; n <= config.n_max; ++n) {
    const auto spaces =
        enumerate_spaces(n, config.seeds, config.allow_large);
    const UniversePtr& universe = spaces.front().universe();

    std::vector<Event> events;
    events.reserve(universe->full_mask() + 1);
    for (std::uint64_t bits = 0; bits <= universe->full_mask(); ++bits) {
      events.emplace_back(universe, bits);
    }
    const auto partitions = set_partitions(universe);
    const auto covers = two_block_covers(universe);

    for (std::size_t ordinal = 0; ordinal < spaces.size(); ++ordinal) {
      const ApproximationSpace& space = spaces[ordinal];
      const LawChecker checker(space);
      const std::uint64_t tag =
          (static_cast<std::uint64_t>(n) << 32) | ordinal;
      const auto variables =
          sweep_variables(space, tag, config.variables_per_space);

      for (std::size_t li = 0; li < active.size(); ++li) {
        const LawInfo& info = *active[li];
        LawReport& report = reports[li];
        const auto started = Clock::now();

        LawInput input;
        const auto engage = [&] {
          const CheckResult result = checker.check(info.id, input);
          ++report.instances;
          if (result.verdict == Verdict::vacuous) {
            ++report.vacuous;
          } else if (result.verdict == Verdict::violated) {
            ++report.violations;
            if (report.counterexamples.size() < config.max_counterexamples) {
              report.counterexamples.push_back(
                  {space.str(), render_input(info, input), result.clause,
                   result.lhs, result.rhs});
            }
          }
        };

        switch (info.kind) {
          case LawKind::space:
            engage();
            break;
          case LawKind::event1:
            for (const Event& a : events) {
              input.events.clear();
              input.events.push_back(a);
              engage();
            }
            break;
          case LawKind::event2:
            for (const Event& a : events) {
              for (const Event& b : events) {
                input.events.clear();
                input.events.push_back(a);
                input.events.push_back(b);
                engage();
              }
            }
            break;
          case LawKind::event3:
            for (const Event& a : events) {
              for (const Event& b : events) {
                for (const Event& c : events) {
                  input.events.clear();
                  input.events.push_back(a);
                  input.events.push_back(b);
                  input.events.push_back(c);
                  engage();
                }
              }
            }
            break;
          case LawKind::partition:
            for (const Event& a : events) {
              input.events.clear();
              input.events.push_back(a);
              for (const auto& partition : partitions) {
                input.blocks = partition;
                engage();
              }
            }
            break;
          case LawKind::cover:
            for (const Event& a : events) {
              input.events.clear();
              input.events.push_back(a);
              for (const auto& cover : covers) {
                input.blocks = cover;
                engage();
              }
            }
            break;
          case LawKind::variable:
            for (const RoughVariable& var : variables) {
              input.variable = &var;
              engage();
            }
            break;
          case LawKind::affine:
            for (const RoughVariable& var : variables) {
              input.variable = &var;
              for (const Rational& a : config.affine_constants) {
                for (const Rational& b : config.affine_constants) {
                  input.a = a;
                  input.b = b;
                  engage();
                }
              }
            }
            break;
        }
        report.elapsed += std::chrono::duration_cast<std::chrono::nanoseconds>(
            Clock::now() - started);
      }
    }
  }

  for (std::size_t li = 0; li < active.size(); ++li) {
    if (reports[li].non_vacuous() == 0) {
      throw std::logic_error("law " + std::string(active[li]->name) +
                             " was never exercised non-vacuously");
    }
  }
  return reports;
}

std::string format_reports(std::span<const LawReport> reports,
                           const SuiteConfig& config) {
  std::ostringstream out;
  out << "rough-probability law suite\n";
  out << "n-max: " << config.n_max << "\n";
  out << "seeds: [";
  for (std::size_t i = 0; i < config.seeds.size(); ++i) {
    if (i > 0) out << ", ";
    out << config.seeds[i];
  }
  out << "]\n";
  out << "variables per space: 1 identity + " << config.variables_per_space
      << " random\n";
  out << "affine constants: [";
  for (std::size_t i = 0; i < config.affine_constants.size(); ++i) {
    if (i > 0) out << ", ";
    out << config.affine_constants[i].str();
  }
  out << "]\n";
  out << "cover variant: " << (config.include_cover_variant ? "on" : "off")
      << "\n";
  out << "negative controls: "
      << (config.include_negative_controls ? "on" : "off") << "\n";

  out << "maps:";
  std::uint64_t total_spaces = 0;
  for (int n = 1; n <= config.n_max; ++n) {
    out << " n=" << n << ": " << map_count(n);
    total_spaces += map_count(n) * (1 + config.seeds.size());
  }
  out << " (measures per map: " << 1 + config.seeds.size() << ")\n";
  out << "spaces: " << total_spaces << "\n\n";

  out << std::left << std::setw(22) << "law" << std::right << std::setw(12)
      << "instances" << std::setw(13) << "non-vacuous" << std::setw(12)
      << "violations"
      << "  status\n";
  for (const LawReport& report : reports) {
    const LawInfo& info = law_info(report.law);
    out << std::left << std::setw(22) << info.name << std::right
        << std::setw(12) << report.instances << std::setw(13)
        << report.non_vacuous() << std::setw(12) << report.violations << "  "
        << (report.violations == 0 ? "pass" : "VIOLATED")
        << (info.control ? " (control)" : "") << "\n";
  }

  std::size_t broken = 0;
  for (const LawReport& report : reports) {
    if (report.violations > 0) ++broken;
  }

  if (broken > 0) {
    out << "\ncounterexamples:\n";
    for (const LawReport& report : reports) {
      if (report.violations == 0) continue;
      const LawInfo& info = law_info(report.law);
      for (const Counterexample& ce : report.counterexamples) {
        out << "[" << info.name << "] space: " << ce.space << "\n";
        if (!ce.input.empty()) out << "  input:  " << ce.input << "\n";
        out << "  broken: " << ce.clause << "\n";
        out << "  lhs: " << ce.lhs << "\n";
        out << "  rhs: " << ce.rhs << "\n";
      }
      if (report.violations > report.counterexamples.size()) {
        out << "  (" << report.violations - report.counterexamples.size()
            << " more violations of " << info.name << " not shown)\n";
      }
    }
  }

  out << "\nresult: ";
  if (broken == 0) {
    out << "all " << reports.size() << " laws hold on the swept domain\n";
  } else {
    out << "counterexamples found for " << broken << " of " << reports.size()
        << " laws\n";
  }
  return out.str();
}

bool all_laws_hold(std::span<const LawReport> reports) {
  for (const LawReport& report : reports) {
    if (report.violations > 0) return false;
  }
  return true;
}

}  // namespace roughprob
