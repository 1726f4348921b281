#include "roughprob/document.hpp"

#include <algorithm>
#include <utility>

#include "json.hpp"

namespace roughprob {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema_fail(const std::string& where,
                              const std::string& what) {
  throw Error(Errc::schema_error, where + ": " + what);
}

Rational parse_fraction(const Json& value, const std::string& where) {
  if (!value.is_string()) {
    schema_fail(where, "fraction must be a string such as \"1/6\"");
  }
  try {
    return Rational::parse(value.get<std::string>());
  } catch (const Error& e) {
    schema_fail(where, e.what());
  }
}

const Json& expect_object(const Json& value, const std::string& where) {
  if (!value.is_object()) schema_fail(where, "expected an object");
  return value;
}

const Json& expect_array(const Json& value, const std::string& where) {
  if (!value.is_array()) schema_fail(where, "expected an array");
  return value;
}

std::string expect_string(const Json& value, const std::string& where) {
  if (!value.is_string()) schema_fail(where, "expected a string");
  return value.get<std::string>();
}

}  // namespace

std::vector<std::string> SpaceDocument::variable_names() const {
  std::vector<std::string> names;
  names.reserve(variables_.size());
  for (const auto& [name, values] : variables_) names.push_back(name);
  return names;
}

bool SpaceDocument::has_variable(const std::string& name) const {
  return built_variables_.contains(name);
}

const RoughVariable& SpaceDocument::variable(const std::string& name) const {
  const auto it = built_variables_.find(name);
  if (it == built_variables_.end()) {
    throw Error(Errc::unknown_name, "unknown variable '" + name + "'");
  }
  return it->second;
}

std::vector<std::string> SpaceDocument::event_names() const {
  std::vector<std::string> names;
  names.reserve(events_.size());
  for (const auto& [name, bits] : events_) names.push_back(name);
  return names;
}

bool SpaceDocument::has_event(const std::string& name) const {
  return events_.contains(name);
}

Event SpaceDocument::event(const std::string& name) const {
  const auto it = events_.find(name);
  if (it == events_.end()) {
    throw Error(Errc::unknown_name, "unknown event '" + name + "'");
  }
  return Event(space_.universe(), it->second);
}

std::string SpaceDocument::to_json() const {
  Json out = Json::object();
  out["elements"] = elements_;

  Json map = Json::object();
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    map[elements_[i]] = mapping_[i];
  }
  out["map"] = std::move(map);

  if (weights_) {
    Json weights = Json::object();
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      weights[elements_[i]] = (*weights_)[i].str();
    }
    out["weights"] = std::move(weights);
  }

  if (!variables_.empty()) {
    Json variables = Json::object();
    for (const auto& [name, values] : variables_) {
      Json assignment = Json::object();
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        assignment[elements_[i]] = values[i].str();
      }
      variables[name] = std::move(assignment);
    }
    out["variables"] = std::move(variables);
  }

  if (!events_.empty()) {
    Json events = Json::object();
    for (const auto& [name, bits] : events_) {
      events[name] = Event(space_.universe(), bits).labels();
    }
    out["events"] = std::move(events);
  }

  if (!notes_.empty()) {
    out["notes"] = notes_;
  }

  return out.dump(2) + "\n";
}

bool operator==(const SpaceDocument& lhs, const SpaceDocument& rhs) {
  return lhs.elements_ == rhs.elements_ && lhs.mapping_ == rhs.mapping_ &&
         lhs.weights_ == rhs.weights_ && lhs.variables_ == rhs.variables_ &&
         lhs.events_ == rhs.events_ && lhs.notes_ == rhs.notes_;
}

SpaceDocument parse_space_document(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::syntax_error, std::string("invalid JSON: ") + e.what());
  }
  expect_object(root, "document");

  static constexpr std::string_view kAllowed[] = {
      "elements", "map", "weights", "variables", "events", "notes"};
  for (const auto& [key, value] : root.items()) {
    if (std::find(std::begin(kAllowed), std::end(kAllowed), key) ==
        std::end(kAllowed)) {
      schema_fail("document", "unknown field '" + key + "'");
    }
  }

  if (!root.contains("elements")) schema_fail("document", "missing 'elements'");
  if (!root.contains("map")) schema_fail("document", "missing 'map'");

  std::vector<std::string> elements;
  for (const Json& item : expect_array(root["elements"], "elements")) {
    elements.push_back(expect_string(item, "elements"));
  }

  const Json& map_json = expect_object(root["map"], "map");
  std::map<std::string, std::vector<std::string>> mapping;
  for (const auto& [label, image] : map_json.items()) {
    std::vector<std::string> members;
    for (const Json& item : expect_array(image, "map." + label)) {
      members.push_back(expect_string(item, "map." + label));
    }
    mapping[label] = std::move(members);
  }
  for (const std::string& label : elements) {
    if (!mapping.contains(label)) {
      schema_fail("map", "missing entry for element '" + label + "'");
    }
  }

  std::optional<std::map<std::string, Rational>> weights;
  if (root.contains("weights")) {
    weights.emplace();
    for (const auto& [label, value] :
         expect_object(root["weights"], "weights").items()) {
      (*weights)[label] = parse_fraction(value, "weights." + label);
    }
    for (const std::string& label : elements) {
      if (!weights->contains(label)) {
        schema_fail("weights", "missing entry for element '" + label + "'");
      }
    }
  }

  ApproximationSpace space = [&] {
    try {
      return build_space(elements, mapping, weights);
    } catch (const Error& e) {
      throw Error(e.code(), "document: " + std::string(e.what()));
    }
  }();

  SpaceDocument doc(std::move(space), elements);
  const UniversePtr& universe = doc.space_.universe();

  doc.mapping_.resize(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    doc.mapping_[i] = doc.space_.map().image(i).labels();
  }
  if (weights) {
    doc.weights_.emplace();
    doc.weights_->reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      doc.weights_->push_back(doc.space_.measure().weight(i));
    }
  }

  if (root.contains("variables")) {
    for (const auto& [name, assignment] :
         expect_object(root["variables"], "variables").items()) {
      const std::string where = "variables." + name;
      std::map<std::string, Rational> values;
      for (const auto& [label, value] :
           expect_object(assignment, where).items()) {
        values[label] = parse_fraction(value, where + "." + label);
      }
      try {
        RoughVariable var = build_variable(doc.space_, values);
        std::vector<Rational> by_index;
        by_index.reserve(elements.size());
        for (std::size_t i = 0; i < elements.size(); ++i) {
          by_index.push_back(var.value(i));
        }
        doc.variables_[name] = std::move(by_index);
        doc.built_variables_.emplace(name, std::move(var));
      } catch (const Error& e) {
        throw Error(e.code(), where + ": " + std::string(e.what()));
      }
    }
  }

  if (root.contains("events")) {
    for (const auto& [name, members] :
         expect_object(root["events"], "events").items()) {
      const std::string where = "events." + name;
      std::uint64_t bits = 0;
      for (const Json& item : expect_array(members, where)) {
        const std::string label = expect_string(item, where);
        try {
          bits |= std::uint64_t{1} << universe->index_of(label);
        } catch (const Error& e) {
          throw Error(e.code(), where + ": " + std::string(e.what()));
        }
      }
      doc.events_[name] = bits;
    }
  }

  if (root.contains("notes")) {
    for (const Json& item : expect_array(root["notes"], "notes")) {
      doc.notes_.push_back(expect_string(item, "notes"));
    }
  }

  return doc;
}

}  // namespace roughprob
