#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mimicnet {

/// Signed exact rational, used where intermediate quantities may go negative.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Exact nonnegative edge weight.
///
/// Always held in lowest terms with a positive denominator. There is no
/// floating-point path anywhere: construction from a negative value throws,
/// and subtraction is only offered in the residual form that floors at zero.
class Weight {
 public:
  Weight() = default;
  Weight(long value);  // NOLINT(google-explicit-constructor)
  explicit Weight(const Rational& value);
  Weight(const BigInt& numerator, const BigInt& denominator);

  /// Parses the canonical "p/q" form. A bare integer such as "3" is rejected,
  /// as are negative numerators and zero denominators.
  static Weight parse(std::string_view text);

  const Rational& value() const noexcept { return value_; }
  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }

  /// "p/q" with an explicit denominator, e.g. "3/1".
  std::string to_string() const;

  Weight& operator+=(const Weight& other);
  Weight& operator*=(const Weight& other);

  /// max(this - other, 0).
  Weight residual_sub(const Weight& other) const;

  friend Weight operator+(Weight lhs, const Weight& rhs) { return lhs += rhs; }
  friend Weight operator*(Weight lhs, const Weight& rhs) { return lhs *= rhs; }

  friend bool operator==(const Weight& lhs, const Weight& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Weight& lhs, const Weight& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  void check_nonnegative() const;

  Rational value_{0};
};

}  // namespace mimicnet
