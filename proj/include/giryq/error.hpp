#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace giryq {

enum class ErrorKind {
  negative_weight,
  mass_not_one,
  space_mismatch,
  duplicate_atom,
  invalid_space,
  value_out_of_range,
  not_deterministic,
  dimension_mismatch,
  probe_set_incomplete,
  unsupported,
  parse_error,
  validation_error,
  reference_error,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::negative_weight: return "NegativeWeight";
    case ErrorKind::mass_not_one: return "MassNotOne";
    case ErrorKind::space_mismatch: return "SpaceMismatch";
    case ErrorKind::duplicate_atom: return "DuplicateAtom";
    case ErrorKind::invalid_space: return "InvalidSpace";
    case ErrorKind::value_out_of_range: return "ValueOutOfRange";
    case ErrorKind::not_deterministic: return "NotDeterministic";
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::probe_set_incomplete: return "ProbeSetIncomplete";
    case ErrorKind::unsupported: return "Unsupported";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::validation_error: return "ValidationError";
    case ErrorKind::reference_error: return "ReferenceError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` identifies the contract that
/// was violated; `what()` carries a human-readable location.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace giryq
