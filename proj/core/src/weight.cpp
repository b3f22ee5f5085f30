#include "mimicnet/weight.hpp"

#include <cctype>

#include "mimicnet/errors.hpp"

namespace mimicnet {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Weight::Weight(long value) : value_(value) { check_nonnegative(); }

Weight::Weight(const Rational& value) : value_(value) {
  value_.canonicalize();
  check_nonnegative();
}

Weight::Weight(const BigInt& numerator, const BigInt& denominator) {
  if (sgn(denominator) == 0) {
    throw Error(ErrorCode::InvalidWeight, "weight denominator must be nonzero");
  }
  value_ = Rational(numerator, denominator);
  value_.canonicalize();
  check_nonnegative();
}

Weight Weight::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw Error(ErrorCode::InvalidWeight,
                "weight '" + std::string(text) + "' lacks an explicit denominator");
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::InvalidWeight, "malformed weight '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (sgn(d) == 0) {
    throw Error(ErrorCode::InvalidWeight,
                "weight '" + std::string(text) + "' has a zero denominator");
  }
  return Weight(n, d);
}

std::string Weight::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Weight& Weight::operator+=(const Weight& other) {
  value_ += other.value_;
  return *this;
}

Weight& Weight::operator*=(const Weight& other) {
  value_ *= other.value_;
  return *this;
}

Weight Weight::residual_sub(const Weight& other) const {
  if (cmp(value_, other.value_) <= 0) return Weight{};
  return Weight(Rational(value_ - other.value_));
}

void Weight::check_nonnegative() const {
  if (sgn(value_) < 0) {
    throw Error(ErrorCode::InvalidWeight, "weights must be nonnegative, got " +
                                              value_.get_str());
  }
}

}  // namespace mimicnet
