#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mimicnet {

enum class ErrorCode {
  InvalidTerminalSet,
  IllegalMerge,
  NotFound,
  InvalidSide,
  Disconnected,
  OracleTooLarge,
  Precondition,
  Construction,
  Parse,
  State,
  Parameter,
  SizeGuard,
  TerminalMismatch,
  ProfileMismatch,
  InvalidWeight,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for library failures; `code()` tells callers which
/// contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mimicnet
