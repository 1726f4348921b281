#pragma once

#include <stdexcept>
#include <string>

namespace roughprob {

/// Failure categories surfaced by the library. The CLI maps these to
/// process exit codes, so additions here are interface changes.
enum class Errc {
  empty_universe,
  duplicate_element,
  universe_too_large,
  empty_image,
  unknown_label,
  unknown_name,
  missing_value,
  bad_measure,
  universe_mismatch,
  zero_conditioning_mass,
  domain_too_large,
  unknown_law,
  syntax_error,
  schema_error,
  division_by_zero,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace roughprob
