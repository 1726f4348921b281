#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "roughprob/error.hpp"
#include "roughprob/rational.hpp"

namespace roughprob {

class Universe;
using UniversePtr = std::shared_ptr<const Universe>;

/// Finite, ordered ground set. Labels are unique strings; each label has a
/// stable index 0..n-1 that events address as bitmask positions. At most 64
/// elements (one mask word); everything in this library is desk-scale.
class Universe {
 public:
  static constexpr std::size_t max_size = 64;

  static UniversePtr make(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t index) const { return labels_[index]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<std::size_t> find(std::string_view label) const;
  std::size_t index_of(std::string_view label) const;  // throws unknown_label

  std::uint64_t full_mask() const {
    return labels_.size() == 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << labels_.size()) - 1;
  }

  friend bool operator==(const Universe& lhs, const Universe& rhs) {
    return lhs.labels_ == rhs.labels_;
  }

 private:
  explicit Universe(std::vector<std::string> labels)
      : labels_(std::move(labels)) {}

  std::vector<std::string> labels_;
};

/// True when both handles denote the same ground set (pointer fast path,
/// label-list comparison otherwise).
bool same_universe(const UniversePtr& lhs, const UniversePtr& rhs);

/// Subset of a universe, stored as a bitmask over element indices. Set
/// algebra is defined only between events over the same universe; mixing
/// universes throws Errc::universe_mismatch.
class Event {
 public:
  Event(UniversePtr universe, std::uint64_t bits);

  static Event empty(UniversePtr universe) { return Event(universe, 0); }
  static Event full(UniversePtr universe);
  static Event of_labels(UniversePtr universe,
                         std::span<const std::string> labels);

  const UniversePtr& universe() const { return universe_; }
  std::uint64_t bits() const { return bits_; }
  std::size_t count() const;
  bool is_empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == universe_->full_mask(); }
  bool contains(std::size_t index) const {
    return (bits_ >> index) & std::uint64_t{1};
  }

  Event complement() const { return with_bits(~bits_); }
  Event operator~() const { return complement(); }
  bool subset_of(const Event& other) const;

  friend Event operator|(const Event& lhs, const Event& rhs);
  friend Event operator&(const Event& lhs, const Event& rhs);
  friend Event operator-(const Event& lhs, const Event& rhs);
  friend bool operator==(const Event& lhs, const Event& rhs);

  std::vector<std::string> labels() const;
  std::string str() const;  // "{1, 3, 5}" in universe order

 private:
  Event with_bits(std::uint64_t bits) const {
    return Event(universe_, bits & universe_->full_mask());
  }

  UniversePtr universe_;
  std::uint64_t bits_;
};

/// Set-valued mapping T: every element is assigned a non-empty subset of the
/// universe.
class SetValuedMap {
 public:
  static SetValuedMap make(UniversePtr universe, std::vector<Event> images);
  static SetValuedMap from_bits(UniversePtr universe,
                                std::vector<std::uint64_t> image_bits);

  const UniversePtr& universe() const { return universe_; }
  Event image(std::size_t index) const {
    return Event(universe_, image_[index]);
  }
  std::uint64_t image_bits(std::size_t index) const { return image_[index]; }

 private:
  SetValuedMap(UniversePtr universe, std::vector<std::uint64_t> image)
      : universe_(std::move(universe)), image_(std::move(image)) {}

  UniversePtr universe_;
  std::vector<std::uint64_t> image_;
};

/// Exact finitely-supported probability measure: nonnegative rational weight
/// per element, weights summing to one.
class ProbabilityMeasure {
 public:
  static ProbabilityMeasure uniform(UniversePtr universe);
  static ProbabilityMeasure make(UniversePtr universe,
                                 std::vector<Rational> weights);

  const UniversePtr& universe() const { return universe_; }
  const Rational& weight(std::size_t index) const { return weight_[index]; }

  /// P(A) = sum of member weights. Throws on universe mismatch.
  Rational of(const Event& event) const;

 private:
  ProbabilityMeasure(UniversePtr universe, std::vector<Rational> weight)
      : universe_(std::move(universe)), weight_(std::move(weight)) {}

  UniversePtr universe_;
  std::vector<Rational> weight_;
};

/// A finite universe together with a set-valued map and a probability
/// measure. Immutable once built; all operations on it are pure functions.
class ApproximationSpace {
 public:
  ApproximationSpace(UniversePtr universe, SetValuedMap map,
                     ProbabilityMeasure measure);

  const UniversePtr& universe() const { return universe_; }
  const SetValuedMap& map() const { return map_; }
  const ProbabilityMeasure& measure() const { return measure_; }

  std::size_t size() const { return universe_->size(); }

  Event event(std::uint64_t bits) const { return Event(universe_, bits); }
  Event event_of_labels(std::span<const std::string> labels) const {
    return Event::of_labels(universe_, labels);
  }

  /// "X={a,b}; T(a)={b}, T(b)={b}; p=(1/2, 1/2)" -- used by reports.
  std::string str() const;

 private:
  UniversePtr universe_;
  SetValuedMap map_;
  ProbabilityMeasure measure_;
};

/// Validates and assembles a space. Absent weights install the uniform
/// measure p(x) = 1/n.
ApproximationSpace build_space(
    const std::vector<std::string>& elements,
    const std::map<std::string, std::vector<std::string>>& mapping,
    const std::optional<std::map<std::string, Rational>>& weights =
        std::nullopt);

/// T+(A) = {x : T(x) subset of A}, the certainty region for A.
Event lower_inverse(const ApproximationSpace& space, const Event& a);

/// T-1(A) = {x : T(x) meets A}, the possibility region for A.
Event upper_inverse(const ApproximationSpace& space, const Event& a);

/// x in T(x) for every x.
bool is_reflexive(const ApproximationSpace& space);

/// y in T(x) implies T(y) subset of T(x).
bool is_transitive(const ApproximationSpace& space);

/// A is fixed by both operators: T+(A) = T-1(A) = A.
bool is_exact(const ApproximationSpace& space, const Event& a);

}  // namespace roughprob
