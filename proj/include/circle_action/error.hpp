#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace circle_action {

enum class ErrorCode {
  NotEffective,
  IndexOutOfRange,
  EmptyAction,
  LengthMismatch,
  NotInvariant,
  NotCoprime,
  PreconditionViolation,
  DistinguishedStratum,
  UnknownStratum,
  NoDistinguishedStratum,
  ParityError,
  NegativeMultiplicity,
  CountMismatch,
  MalformedDiagram,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every library failure is reported through this type; the code is the
// machine-readable part, what() carries a one-line diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace circle_action
