#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gqforge {

enum class ErrorKind {
  InvalidInput,
  NotAGroup,
  NotAGQ,
  TooLarge,
  ShapeMismatch,
  AxiomsFail,
  OrderMismatch,
  OrderNotAdmissible,
  NotRegular,
  NotIncident,
  InvalidAction,
  NotRegularPoint,
  UnsupportedField,
  HypothesisFail,
  RangeError,
  BadQ,
};

std::string_view to_string(ErrorKind kind);

/// Base of every exception raised by the library. The kind is stable and
/// is what callers (and the CLI exit-code mapping) should branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gqforge
