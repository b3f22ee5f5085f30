#include "mimicnet/report.hpp"

#include <sstream>

namespace mimicnet {

bool VerificationReport::expect(bool ok, std::string line) {
  if (!ok) fail(std::move(line));
  return ok;
}

std::string VerificationReport::render() const {
  std::ostringstream os;
  os << "check: " << check << '\n';
  os << "instance: " << parameters << '\n';
  for (const auto& d : details) os << "  " << d << '\n';
  for (const auto& f : failures) os << "  FAIL " << f << '\n';
  os << "result: " << (passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace mimicnet
