#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace shuffle_spectra {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Binary floating point number with a detached 64-bit exponent.
///
/// The value is `mantissa * 2^exponent` with |mantissa| in [1, 2), or exactly
/// zero. Quantities such as (p + 1)^-k for k in the tens of thousands stay
/// representable, where a plain double would underflow to zero.
class ExpFloat {
 public:
  ExpFloat() = default;

  static ExpFloat from_double(double value);
  static ExpFloat from_integer(const BigInt& value);
  static ExpFloat from_rational(const Rational& value);
  /// e^x without overflow or underflow.
  static ExpFloat exp(double x);

  double mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }

  bool is_zero() const { return mantissa_ == 0.0; }
  int sign() const { return (mantissa_ > 0.0) - (mantissa_ < 0.0); }

  /// Nearest double; saturates to +-inf or 0 outside the double range.
  double to_double() const;
  /// Natural logarithm of |value|; -inf for zero.
  double log_abs() const;

  ExpFloat abs() const;
  /// Exponentiation by squaring.
  ExpFloat pow(std::uint64_t power) const;

  ExpFloat operator-() const;
  ExpFloat& operator+=(const ExpFloat& rhs);
  ExpFloat& operator-=(const ExpFloat& rhs);
  ExpFloat& operator*=(const ExpFloat& rhs);
  ExpFloat& operator/=(const ExpFloat& rhs);

  friend ExpFloat operator+(ExpFloat lhs, const ExpFloat& rhs) { return lhs += rhs; }
  friend ExpFloat operator-(ExpFloat lhs, const ExpFloat& rhs) { return lhs -= rhs; }
  friend ExpFloat operator*(ExpFloat lhs, const ExpFloat& rhs) { return lhs *= rhs; }
  friend ExpFloat operator/(ExpFloat lhs, const ExpFloat& rhs) { return lhs /= rhs; }

  friend bool operator==(const ExpFloat& lhs, const ExpFloat& rhs) = default;
  friend std::partial_ordering operator<=>(const ExpFloat& lhs, const ExpFloat& rhs);

 private:
  ExpFloat(double mantissa, std::int64_t exponent);
  void normalize();

  double mantissa_ = 0.0;
  std::int64_t exponent_ = 0;
};

enum class NumericMode { exact, scaled };

std::string to_string(NumericMode mode);
NumericMode parse_numeric_mode(const std::string& text);

/// A number carried either as an exact rational or as an ExpFloat.
///
/// Arithmetic between two exact operands stays exact; any scaled operand
/// promotes the result to scaled.
class ScaledScalar {
 public:
  ScaledScalar() : value_(Rational(0)) {}
  explicit ScaledScalar(Rational value) : value_(std::move(value)) {}
  explicit ScaledScalar(ExpFloat value) : value_(value) {}

  static ScaledScalar from_integer(long value, NumericMode mode);
  static ScaledScalar from_integer(const BigInt& value, NumericMode mode);
  static ScaledScalar from_ratio(long numerator, long denominator, NumericMode mode);
  static ScaledScalar from_rational(const Rational& value, NumericMode mode);

  NumericMode mode() const;
  bool is_exact() const { return std::holds_alternative<Rational>(value_); }

  /// Throws DomainError when the value is not exact.
  const Rational& rational() const;
  ExpFloat scaled() const;
  double to_double() const;
  /// Decimal rendering with `significant` digits; handles exponents beyond double range.
  std::string to_decimal(int significant = 17) const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  ScaledScalar abs() const;
  ScaledScalar pow(std::uint64_t power) const;
  ScaledScalar in_mode(NumericMode mode) const;

  ScaledScalar operator-() const;
  ScaledScalar& operator+=(const ScaledScalar& rhs);
  ScaledScalar& operator-=(const ScaledScalar& rhs);
  ScaledScalar& operator*=(const ScaledScalar& rhs);
  ScaledScalar& operator/=(const ScaledScalar& rhs);

  friend ScaledScalar operator+(ScaledScalar lhs, const ScaledScalar& rhs) { return lhs += rhs; }
  friend ScaledScalar operator-(ScaledScalar lhs, const ScaledScalar& rhs) { return lhs -= rhs; }
  friend ScaledScalar operator*(ScaledScalar lhs, const ScaledScalar& rhs) { return lhs *= rhs; }
  friend ScaledScalar operator/(ScaledScalar lhs, const ScaledScalar& rhs) { return lhs /= rhs; }

  /// Exact comparison when both sides are exact, floating comparison otherwise.
  friend bool operator==(const ScaledScalar& lhs, const ScaledScalar& rhs);
  friend std::partial_ordering operator<=>(const ScaledScalar& lhs, const ScaledScalar& rhs);

 private:
  std::variant<Rational, ExpFloat> value_;
};

/// |a - b| <= rel_tol * max(|a|, |b|); exact equality for two exact operands.
bool approx_equal(const ScaledScalar& a, const ScaledScalar& b, double rel_tol = 1e-9);

std::ostream& operator<<(std::ostream& os, const ExpFloat& value);
std::ostream& operator<<(std::ostream& os, const ScaledScalar& value);

/// "%.17g"-style rendering of a double.
std::string format_double(double value, int significant = 17);

}  // namespace shuffle_spectra
