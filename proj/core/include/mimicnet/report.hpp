#pragma once

#include <string>
#include <vector>

namespace mimicnet {

/// Outcome of a verifier: what was checked, on which instance, and any
/// failures found. Rendering is deterministic.
struct VerificationReport {
  std::string check;
  std::string parameters;
  std::vector<std::string> details;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
  void note(std::string line) { details.push_back(std::move(line)); }
  void fail(std::string line) { failures.push_back(std::move(line)); }
  /// Records a failure when `ok` is false; returns `ok`.
  bool expect(bool ok, std::string line);

  std::string render() const;
};

}  // namespace mimicnet
