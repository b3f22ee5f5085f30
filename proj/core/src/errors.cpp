#include "mimicnet/errors.hpp"

namespace mimicnet {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidTerminalSet: return "invalid-terminal-set";
    case ErrorCode::IllegalMerge: return "illegal-merge";
    case ErrorCode::NotFound: return "not-found";
    case ErrorCode::InvalidSide: return "invalid-side";
    case ErrorCode::Disconnected: return "connectivity";
    case ErrorCode::OracleTooLarge: return "oracle-too-large";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::Construction: return "construction";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::State: return "state";
    case ErrorCode::Parameter: return "parameter";
    case ErrorCode::SizeGuard: return "size-guard";
    case ErrorCode::TerminalMismatch: return "terminal-mismatch";
    case ErrorCode::ProfileMismatch: return "profile-mismatch";
    case ErrorCode::InvalidWeight: return "invalid-weight";
  }
  return "unknown";
}

}  // namespace mimicnet
