#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "roughprob/measure.hpp"
#include "roughprob/space.hpp"
#include "roughprob/variable.hpp"

namespace roughprob {

/// Catalog of checkable laws. The P/L/T entries are the provable
/// propositions of the rough-probability calculus; DUAL, IDEMPOTENT,
/// MONOTONE and CONTAIN are the structural operator laws they rest on.
/// The three *_control entries are deliberately false variants kept as
/// negative controls: a sweep that fails to produce counterexamples for
/// them is not actually checking anything.
enum class LawId {
  p2_1_1,
  p2_1_2,
  p2_1_3,
  p2_1_4,
  p2_1_5,
  p2_1_6,
  p2_1_7,
  p2_1_8,
  l2_3_1,
  l2_3_2,
  l2_3_3,
  l2_6_1,
  l2_6_2,
  l2_6_3,
  l2_6_4,
  l2_6_5,
  l2_6_6,
  l2_6_7,
  l2_6_8,
  l2_6_9,
  l2_6_10,
  t2_14,
  t2_15,
  t2_18,
  t2_19,
  t2_20,
  t2_21,
  dual,
  idempotent,
  monotone,
  contain,
  cover_control,        // L2.6.8 quantified over covers instead of partitions
  superadd_control,     // fabricated: P_up(A|B) superadditivity across unions
  asstated_control,     // L2.6.10 without the reflexivity guard
};

/// How a law is quantified, which determines the sweep domain.
enum class LawKind {
  space,      // no inputs beyond the space itself
  event1,     // one event
  event2,     // two events
  event3,     // three events
  partition,  // one event plus a partition of X
  cover,      // one event plus a (possibly overlapping) cover of X
  variable,   // one rough variable
  affine,     // one rough variable plus constants a, b
};

struct LawInfo {
  LawId id;
  std::string_view name;
  std::string_view summary;
  LawKind kind;
  bool control;
};

/// Provable laws in fixed catalog order.
std::span<const LawInfo> law_catalog();

/// Negative controls (expected to yield counterexamples).
std::span<const LawInfo> control_laws();

const LawInfo& law_info(LawId id);

/// Resolves a catalog name such as "P2.1.5"; throws Errc::unknown_law.
LawId parse_law(std::string_view name);

/// Inputs for one law instance; which fields matter depends on the law's
/// kind. `variable` must outlive the check.
struct LawInput {
  std::vector<Event> events;
  std::vector<Event> blocks;  // partition or cover blocks
  const RoughVariable* variable = nullptr;
  Rational a;
  Rational b;
};

enum class Verdict { pass, vacuous, violated };

struct CheckResult {
  Verdict verdict = Verdict::pass;
  std::string clause;  // conclusion that failed, empty otherwise
  std::string lhs;
  std::string rhs;
};

/// Evaluates laws against one space. Construction precomputes the
/// reflexivity/transitivity flags and, for small universes, a full table of
/// approximation masks and probabilities, so sweeps stay cheap. The space
/// must outlive the checker. Checks are pure and safe to run concurrently.
class LawChecker {
 public:
  explicit LawChecker(const ApproximationSpace& space);

  CheckResult check(LawId law, const LawInput& input) const;

  bool reflexive() const { return reflexive_; }
  bool transitive() const { return transitive_; }

 private:
  struct Entry {
    std::uint64_t t_plus;
    std::uint64_t t_minus;
    Rational p;
    Rational p_low;
    Rational p_up;
  };

  std::uint64_t t_plus(std::uint64_t a) const;
  std::uint64_t t_minus(std::uint64_t a) const;
  Rational p(std::uint64_t a) const;
  Rational p_low(std::uint64_t a) const;
  Rational p_up(std::uint64_t a) const;
  bool exact(std::uint64_t a) const;

  const ApproximationSpace& space_;
  std::uint64_t full_;
  bool reflexive_;
  bool transitive_;
  std::vector<Entry> table_;  // 2^n entries when the universe is small
};

/// One-shot convenience around LawChecker.
CheckResult check_law(LawId law, const ApproximationSpace& space,
                      const LawInput& input);
CheckResult check_law(LawId law, const ApproximationSpace& space,
                      std::span<const Event> events);
CheckResult check_law(LawId law, const ApproximationSpace& space,
                      const Event& a, std::span<const Event> blocks);
CheckResult check_law(LawId law, const ApproximationSpace& space,
                      const RoughVariable& var, const Rational& a = 0,
                      const Rational& b = 0);

struct Counterexample {
  std::string space;
  std::string input;
  std::string clause;
  std::string lhs;
  std::string rhs;
};

struct LawReport {
  LawId law;
  std::uint64_t instances = 0;  // law instances evaluated
  std::uint64_t vacuous = 0;    // hypothesis guard unmet
  std::uint64_t violations = 0;
  std::vector<Counterexample> counterexamples;  // first few, capped
  std::chrono::nanoseconds elapsed{0};  // informational; never serialized

  std::uint64_t non_vacuous() const { return instances - vacuous; }
};

struct SuiteConfig {
  int n_max = 3;
  std::vector<std::uint64_t> seeds = {1, 2};  // one random measure per seed
  int variables_per_space = 2;                // beside the identity variable
  std::vector<Rational> affine_constants = {0, 1, -1, 2, -2, Rational(1, 2)};
  bool include_cover_variant = false;     // enable cover_control
  bool include_negative_controls = false; // enable superadd/asstated controls
  bool allow_large = false;               // permit n_max == 4
  std::size_t max_counterexamples = 3;    // recorded per law
};

/// Every set-valued map on a universe of n elements ("1".."n"), each paired
/// with the uniform measure followed by one seeded random rational measure
/// per entry of `seeds`. Exhaustive enumeration is limited to n <= 3
/// ((2^n - 1)^n maps), or n <= 4 when `allow_large` is set; beyond that
/// throws Errc::domain_too_large.
std::vector<ApproximationSpace> enumerate_spaces(
    int n, std::span<const std::uint64_t> seeds = {}, bool allow_large = false);

/// Number of set-valued maps enumerate_spaces yields for a given n.
std::uint64_t map_count(int n);

/// All set partitions of the universe, blocks ordered by least element,
/// partitions in restricted-growth-string order.
std::vector<std::vector<Event>> set_partitions(const UniversePtr& universe);

/// U(x) = index + 1; the canonical die variable on enumerated spaces.
RoughVariable identity_variable(const ApproximationSpace& space);

/// Sweeps every active law over the enumerated spaces, all events per event
/// slot, all partitions, and the configured variables and affine constants.
/// Deterministic: identical configs produce identical reports. Throws
/// std::logic_error if any active law ends up with zero non-vacuous
/// instances, which would mean the sweep never engaged its hypotheses.
std::vector<LawReport> run_suite(const SuiteConfig& config);

/// Deterministic text serialization of a suite run (config echo, one line
/// per law, counterexample details). Contains no timing, so identical runs
/// are byte-identical.
std::string format_reports(std::span<const LawReport> reports,
                           const SuiteConfig& config);

/// True when no report carries a violation.
bool all_laws_hold(std::span<const LawReport> reports);

}  // namespace roughprob
