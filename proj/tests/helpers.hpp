#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "roughprob/space.hpp"

namespace testutil {

using LabelSet = std::set<std::string>;
using LabelMap = std::map<std::string, LabelSet>;

/// The running six-element example: X = {1..6}, T(1)={1}, T(2)={1,2},
/// T(3)={3}, T(4)={4}, T(5)=T(6)={1,5,6}, uniform measure.
inline roughprob::ApproximationSpace example_space() {
  return roughprob::build_space(
      {"1", "2", "3", "4", "5", "6"},
      {{"1", {"1"}},
       {"2", {"1", "2"}},
       {"3", {"3"}},
       {"4", {"4"}},
       {"5", {"1", "5", "6"}},
       {"6", {"1", "5", "6"}}});
}

/// T(x) = {x} on {1..n} with the uniform measure; every event is exact.
inline roughprob::ApproximationSpace identity_space(int n = 6) {
  std::vector<std::string> elements;
  std::map<std::string, std::vector<std::string>> mapping;
  for (int i = 1; i <= n; ++i) {
    elements.push_back(std::to_string(i));
    mapping[elements.back()] = {elements.back()};
  }
  return roughprob::build_space(elements, mapping);
}

/// Event from a comma-separated label list, e.g. ev(space, "1,3,5").
inline roughprob::Event ev(const roughprob::ApproximationSpace& space,
                           const std::string& csv) {
  std::vector<std::string> labels;
  std::string token;
  std::istringstream stream(csv);
  while (std::getline(stream, token, ',')) {
    if (!token.empty()) labels.push_back(token);
  }
  return space.event_of_labels(labels);
}

/// Label-set oracle for the lower inverse, independent of the bitmask
/// implementation: {x : T(x) subset of A} by direct set comparison.
inline LabelSet oracle_lower_inverse(const LabelMap& map, const LabelSet& a) {
  LabelSet out;
  for (const auto& [x, image] : map) {
    bool inside = true;
    for (const auto& y : image) {
      if (!a.contains(y)) {
        inside = false;
        break;
      }
    }
    if (inside) out.insert(x);
  }
  return out;
}

/// Label-set oracle for the upper inverse: {x : T(x) meets A}.
inline LabelSet oracle_upper_inverse(const LabelMap& map, const LabelSet& a) {
  LabelSet out;
  for (const auto& [x, image] : map) {
    for (const auto& y : image) {
      if (a.contains(y)) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

/// The example map in oracle form.
inline LabelMap example_label_map() {
  return {{"1", {"1"}},           {"2", {"1", "2"}}, {"3", {"3"}},
          {"4", {"4"}},           {"5", {"1", "5", "6"}},
          {"6", {"1", "5", "6"}}};
}

inline LabelSet to_label_set(const roughprob::Event& event) {
  const auto labels = event.labels();
  return LabelSet(labels.begin(), labels.end());
}

}  // namespace testutil
