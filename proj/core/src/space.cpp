#include "roughprob/space.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>
#include <utility>

namespace roughprob {

UniversePtr Universe::make(std::vector<std::string> labels) {
  if (labels.empty()) {
    throw Error(Errc::empty_universe, "universe must have at least one element");
  }
  if (labels.size() > max_size) {
    throw Error(Errc::universe_too_large,
                "universe of " + std::to_string(labels.size()) +
                    " elements exceeds the supported maximum of 64");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw Error(Errc::duplicate_element, "duplicate element '" + label + "'");
    }
  }
  return UniversePtr(new Universe(std::move(labels)));
}

std::optional<std::size_t> Universe::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t Universe::index_of(std::string_view label) const {
  if (auto index = find(label)) return *index;
  throw Error(Errc::unknown_label, "unknown element '" + std::string(label) + "'");
}

bool same_universe(const UniversePtr& lhs, const UniversePtr& rhs) {
  return lhs == rhs || (lhs && rhs && *lhs == *rhs);
}

Event::Event(UniversePtr universe, std::uint64_t bits)
    : universe_(std::move(universe)), bits_(bits) {
  if ((bits_ & ~universe_->full_mask()) != 0) {
    throw std::out_of_range("event bits outside the universe");
  }
}

Event Event::full(UniversePtr universe) {
  const std::uint64_t mask = universe->full_mask();
  return Event(std::move(universe), mask);
}

Event Event::of_labels(UniversePtr universe,
                       std::span<const std::string> labels) {
  std::uint64_t bits = 0;
  for (const auto& label : labels) {
    bits |= std::uint64_t{1} << universe->index_of(label);
  }
  return Event(std::move(universe), bits);
}

std::size_t Event::count() const { return std::popcount(bits_); }

namespace {

void check_universe(const Event& lhs, const Event& rhs) {
  if (!same_universe(lhs.universe(), rhs.universe())) {
    throw Error(Errc::universe_mismatch,
                "events belong to different universes");
  }
}

}  // namespace

bool Event::subset_of(const Event& other) const {
  check_universe(*this, other);
  return (bits_ & ~other.bits_) == 0;
}

Event operator|(const Event& lhs, const Event& rhs) {
  check_universe(lhs, rhs);
  return Event(lhs.universe_, lhs.bits_ | rhs.bits_);
}

Event operator&(const Event& lhs, const Event& rhs) {
  check_universe(lhs, rhs);
  return Event(lhs.universe_, lhs.bits_ & rhs.bits_);
}

Event operator-(const Event& lhs, const Event& rhs) {
  check_universe(lhs, rhs);
  return Event(lhs.universe_, lhs.bits_ & ~rhs.bits_);
}

bool operator==(const Event& lhs, const Event& rhs) {
  check_universe(lhs, rhs);
  return lhs.bits_ == rhs.bits_;
}

std::vector<std::string> Event::labels() const {
  std::vector<std::string> out;
  out.reserve(count());
  for (std::size_t i = 0; i < universe_->size(); ++i) {
    if (contains(i)) out.push_back(universe_->label(i));
  }
  return out;
}

std::string Event::str() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < universe_->size(); ++i) {
    if (!contains(i)) continue;
    if (!first) out += ", ";
    out += universe_->label(i);
    first = false;
  }
  out += '}';
  return out;
}

SetValuedMap SetValuedMap::make(UniversePtr universe,
                                std::vector<Event> images) {
  std::vector<std::uint64_t> bits;
  bits.reserve(images.size());
  for (const auto& image : images) {
    if (!same_universe(universe, image.universe())) {
      throw Error(Errc::universe_mismatch,
                  "map image belongs to a different universe");
    }
    bits.push_back(image.bits());
  }
  return from_bits(std::move(universe), std::move(bits));
}

SetValuedMap SetValuedMap::from_bits(UniversePtr universe,
                                     std::vector<std::uint64_t> image_bits) {
  if (image_bits.size() != universe->size()) {
    throw Error(Errc::missing_value, "map must assign an image to every element");
  }
  for (std::size_t i = 0; i < image_bits.size(); ++i) {
    if ((image_bits[i] & ~universe->full_mask()) != 0) {
      throw std::out_of_range("image bits outside the universe");
    }
    if (image_bits[i] == 0) {
      throw Error(Errc::empty_image,
                  "empty image for element '" + universe->label(i) + "'");
    }
  }
  return SetValuedMap(std::move(universe), std::move(image_bits));
}

ProbabilityMeasure ProbabilityMeasure::uniform(UniversePtr universe) {
  const auto n = static_cast<long long>(universe->size());
  std::vector<Rational> weights(universe->size(), Rational(1, n));
  return ProbabilityMeasure(std::move(universe), std::move(weights));
}

ProbabilityMeasure ProbabilityMeasure::make(UniversePtr universe,
                                            std::vector<Rational> weights) {
  if (weights.size() != universe->size()) {
    throw Error(Errc::missing_value, "measure must weight every element");
  }
  Rational total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].sign() < 0) {
      throw Error(Errc::bad_measure, "negative weight for element '" +
                                         universe->label(i) + "'");
    }
    total += weights[i];
  }
  if (total != Rational(1)) {
    throw Error(Errc::bad_measure,
                "weights sum to " + total.str() + ", expected 1");
  }
  return ProbabilityMeasure(std::move(universe), std::move(weights));
}

Rational ProbabilityMeasure::of(const Event& event) const {
  if (!same_universe(universe_, event.universe())) {
    throw Error(Errc::universe_mismatch,
                "event belongs to a different universe than the measure");
  }
  Rational total;
  for (std::size_t i = 0; i < weight_.size(); ++i) {
    if (event.contains(i)) total += weight_[i];
  }
  return total;
}

ApproximationSpace::ApproximationSpace(UniversePtr universe, SetValuedMap map,
                                       ProbabilityMeasure measure)
    : universe_(std::move(universe)),
      map_(std::move(map)),
      measure_(std::move(measure)) {
  if (!same_universe(universe_, map_.universe()) ||
      !same_universe(universe_, measure_.universe())) {
    throw Error(Errc::universe_mismatch,
                "space components reference different universes");
  }
}

std::string ApproximationSpace::str() const {
  std::ostringstream out;
  out << "X=" << Event::full(universe_).str() << "; T: ";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i > 0) out << ", ";
    out << universe_->label(i) << "->" << map_.image(i).str();
  }
  out << "; p=(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i > 0) out << ", ";
    out << measure_.weight(i).str();
  }
  out << ")";
  return out.str();
}

ApproximationSpace build_space(
    const std::vector<std::string>& elements,
    const std::map<std::string, std::vector<std::string>>& mapping,
    const std::optional<std::map<std::string, Rational>>& weights) {
  UniversePtr universe = Universe::make(elements);

  for (const auto& [label, image] : mapping) {
    universe->index_of(label);  // throws unknown_label
    (void)image;
  }

  std::vector<std::uint64_t> image_bits(universe->size(), 0);
  for (std::size_t i = 0; i < universe->size(); ++i) {
    const auto it = mapping.find(universe->label(i));
    if (it == mapping.end()) {
      throw Error(Errc::missing_value,
                  "no image for element '" + universe->label(i) + "'");
    }
    if (it->second.empty()) {
      throw Error(Errc::empty_image,
                  "empty image for element '" + universe->label(i) + "'");
    }
    for (const auto& member : it->second) {
      image_bits[i] |= std::uint64_t{1} << universe->index_of(member);
    }
  }
  SetValuedMap map = SetValuedMap::from_bits(universe, std::move(image_bits));

  ProbabilityMeasure measure = [&] {
    if (!weights) return ProbabilityMeasure::uniform(universe);
    for (const auto& [label, weight] : *weights) {
      universe->index_of(label);
      (void)weight;
    }
    std::vector<Rational> per_index(universe->size());
    for (std::size_t i = 0; i < universe->size(); ++i) {
      const auto it = weights->find(universe->label(i));
      if (it == weights->end()) {
        throw Error(Errc::missing_value,
                    "no weight for element '" + universe->label(i) + "'");
      }
      per_index[i] = it->second;
    }
    return ProbabilityMeasure::make(universe, std::move(per_index));
  }();

  return ApproximationSpace(universe, std::move(map), std::move(measure));
}

namespace {

void check_event(const ApproximationSpace& space, const Event& a) {
  if (!same_universe(space.universe(), a.universe())) {
    throw Error(Errc::universe_mismatch,
                "event belongs to a different universe than the space");
  }
}

}  // namespace

Event lower_inverse(const ApproximationSpace& space, const Event& a) {
  check_event(space, a);
  std::uint64_t bits = 0;
  for (std::size_t x = 0; x < space.size(); ++x) {
    if ((space.map().image_bits(x) & ~a.bits()) == 0) {
      bits |= std::uint64_t{1} << x;
    }
  }
  return space.event(bits);
}

Event upper_inverse(const ApproximationSpace& space, const Event& a) {
  check_event(space, a);
  std::uint64_t bits = 0;
  for (std::size_t x = 0; x < space.size(); ++x) {
    if ((space.map().image_bits(x) & a.bits()) != 0) {
      bits |= std::uint64_t{1} << x;
    }
  }
  return space.event(bits);
}

bool is_reflexive(const ApproximationSpace& space) {
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (!((space.map().image_bits(x) >> x) & std::uint64_t{1})) return false;
  }
  return true;
}

bool is_transitive(const ApproximationSpace& space) {
  for (std::size_t x = 0; x < space.size(); ++x) {
    const std::uint64_t tx = space.map().image_bits(x);
    for (std::size_t y = 0; y < space.size(); ++y) {
      if (!((tx >> y) & std::uint64_t{1})) continue;
      if ((space.map().image_bits(y) & ~tx) != 0) return false;
    }
  }
  return true;
}

bool is_exact(const ApproximationSpace& space, const Event& a) {
  check_event(space, a);
  return lower_inverse(space, a).bits() == a.bits() &&
         upper_inverse(space, a).bits() == a.bits();
}

}  // namespace roughprob
