#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "roughprob/space.hpp"
#include "roughprob/variable.hpp"

namespace roughprob {

/// Parsed, validated and canonicalized space file. The JSON schema is
/// strict: the only top-level keys are "elements", "map", "weights",
/// "variables", "events" and "notes"; anything else is rejected so typos
/// in fixtures cannot pass silently. Fractions travel as strings ("1/6",
/// unreduced "2/6" accepted) and are canonicalized on parse. "notes" is an
/// optional list of free-text lines that reports print verbatim.
class SpaceDocument {
 public:
  const std::vector<std::string>& elements() const { return elements_; }
  const ApproximationSpace& space() const { return space_; }
  bool has_weights() const { return weights_.has_value(); }
  const std::vector<std::string>& notes() const { return notes_; }

  std::vector<std::string> variable_names() const;
  bool has_variable(const std::string& name) const;
  /// Throws Errc::unknown_name for names not present in the document.
  const RoughVariable& variable(const std::string& name) const;

  std::vector<std::string> event_names() const;
  bool has_event(const std::string& name) const;
  Event event(const std::string& name) const;

  /// Canonical serialization: universe-ordered member lists, name-sorted
  /// collections, fractions in lowest terms. parse(to_json()) reproduces
  /// the document exactly.
  std::string to_json() const;

  friend bool operator==(const SpaceDocument& lhs, const SpaceDocument& rhs);

 private:
  friend SpaceDocument parse_space_document(std::string_view text);

  SpaceDocument(ApproximationSpace space, std::vector<std::string> elements)
      : space_(std::move(space)), elements_(std::move(elements)) {}

  ApproximationSpace space_;
  std::vector<std::string> elements_;
  std::vector<std::vector<std::string>> mapping_;        // by element index
  std::optional<std::vector<Rational>> weights_;         // by element index
  std::map<std::string, std::vector<Rational>> variables_;  // by element index
  std::map<std::string, RoughVariable> built_variables_;
  std::map<std::string, std::uint64_t> events_;
  std::vector<std::string> notes_;
};

/// Parses and validates a space document. Malformed JSON raises
/// Errc::syntax_error; schema violations raise Errc::schema_error; domain
/// validation failures surface the underlying error with field context in
/// the message.
SpaceDocument parse_space_document(std::string_view text);

}  // namespace roughprob
