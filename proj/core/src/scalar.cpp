#include "shuffle_spectra/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

#include "shuffle_spectra/errors.hpp"

namespace shuffle_spectra {

namespace {

// Beyond this exponent gap the smaller addend cannot affect a 53-bit mantissa.
constexpr std::int64_t kNegligibleGap = 64;

}  // namespace

ExpFloat::ExpFloat(double mantissa, std::int64_t exponent)
    : mantissa_(mantissa), exponent_(exponent) {
  normalize();
}

void ExpFloat::normalize() {
  if (mantissa_ == 0.0 || !std::isfinite(mantissa_)) {
    if (mantissa_ == 0.0) exponent_ = 0;
    return;
  }
  int shift = 0;
  const double fraction = std::frexp(mantissa_, &shift);  // [0.5, 1)
  mantissa_ = fraction * 2.0;
  exponent_ += shift - 1;
}

ExpFloat ExpFloat::from_double(double value) { return ExpFloat(value, 0); }

ExpFloat ExpFloat::from_integer(const BigInt& value) {
  if (value == 0) return {};
  long exp2 = 0;
  const double fraction = mpz_get_d_2exp(&exp2, value.get_mpz_t());
  return ExpFloat(fraction, exp2);
}

ExpFloat ExpFloat::from_rational(const Rational& value) {
  if (value == 0) return {};
  const BigInt num = ::abs(value.get_num());
  const BigInt& den = value.get_den();
  const auto num_bits = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
  const auto den_bits = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  // Scale so the integer quotient carries at least 64 significant bits;
  // truncation then loses less than one unit in the last place.
  const long shift = 65 - (num_bits - den_bits);
  BigInt quotient;
  if (shift >= 0) {
    BigInt scaled = num;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    mpz_tdiv_q(quotient.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  } else {
    BigInt scaled = den;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    mpz_tdiv_q(quotient.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
  }
  ExpFloat result = from_integer(quotient);
  result.exponent_ -= shift;
  if (value < 0) result.mantissa_ = -result.mantissa_;
  return result;
}

ExpFloat ExpFloat::exp(double x) {
  if (std::isinf(x) && x < 0) return {};
  const double exp2 = std::floor(x / std::numbers::ln2);
  const double remainder = x - exp2 * std::numbers::ln2;
  return ExpFloat(std::exp(remainder), static_cast<std::int64_t>(exp2));
}

double ExpFloat::to_double() const {
  if (is_zero()) return 0.0;
  if (exponent_ > std::numeric_limits<double>::max_exponent) {
    return mantissa_ > 0 ? std::numeric_limits<double>::infinity()
                         : -std::numeric_limits<double>::infinity();
  }
  if (exponent_ < std::numeric_limits<double>::min_exponent - 60) return 0.0;
  return std::ldexp(mantissa_, static_cast<int>(exponent_));
}

double ExpFloat::log_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  return std::log(std::fabs(mantissa_)) + static_cast<double>(exponent_) * std::numbers::ln2;
}

ExpFloat ExpFloat::abs() const {
  ExpFloat out = *this;
  out.mantissa_ = std::fabs(out.mantissa_);
  return out;
}

ExpFloat ExpFloat::pow(std::uint64_t power) const {
  ExpFloat result = from_double(1.0);
  ExpFloat base = *this;
  while (power > 0) {
    if (power & 1U) result *= base;
    power >>= 1U;
    if (power > 0) base *= base;
  }
  return result;
}

ExpFloat ExpFloat::operator-() const {
  ExpFloat out = *this;
  out.mantissa_ = -out.mantissa_;
  return out;
}

ExpFloat& ExpFloat::operator+=(const ExpFloat& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const std::int64_t gap = exponent_ - rhs.exponent_;
  if (gap >= 0) {
    if (gap > kNegligibleGap) return *this;
    mantissa_ += std::ldexp(rhs.mantissa_, static_cast<int>(-gap));
  } else {
    if (-gap > kNegligibleGap) return *this = rhs;
    mantissa_ = rhs.mantissa_ + std::ldexp(mantissa_, static_cast<int>(gap));
    exponent_ = rhs.exponent_;
  }
  normalize();
  return *this;
}

ExpFloat& ExpFloat::operator-=(const ExpFloat& rhs) { return *this += -rhs; }

ExpFloat& ExpFloat::operator*=(const ExpFloat& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = ExpFloat{};
  mantissa_ *= rhs.mantissa_;
  exponent_ += rhs.exponent_;
  normalize();
  return *this;
}

ExpFloat& ExpFloat::operator/=(const ExpFloat& rhs) {
  if (rhs.is_zero()) throw DomainError("ExpFloat: division by zero");
  if (is_zero()) return *this;
  mantissa_ /= rhs.mantissa_;
  exponent_ -= rhs.exponent_;
  normalize();
  return *this;
}

std::partial_ordering operator<=>(const ExpFloat& lhs, const ExpFloat& rhs) {
  if (lhs.sign() != rhs.sign()) return lhs.sign() <=> rhs.sign();
  if (lhs.is_zero()) return std::partial_ordering::equivalent;
  std::partial_ordering magnitude = lhs.exponent_ != rhs.exponent_
                                        ? (lhs.exponent_ <=> rhs.exponent_)
                                        : (std::fabs(lhs.mantissa_) <=> std::fabs(rhs.mantissa_));
  if (lhs.sign() > 0) return magnitude;
  if (magnitude == std::partial_ordering::less) return std::partial_ordering::greater;
  if (magnitude == std::partial_ordering::greater) return std::partial_ordering::less;
  return magnitude;
}

std::string to_string(NumericMode mode) { return mode == NumericMode::exact ? "exact" : "float"; }

NumericMode parse_numeric_mode(const std::string& text) {
  if (text == "exact") return NumericMode::exact;
  if (text == "float" || text == "scaled") return NumericMode::scaled;
  throw DomainError("unknown numeric mode '" + text + "' (expected exact or float)");
}

ScaledScalar ScaledScalar::from_integer(long value, NumericMode mode) {
  if (mode == NumericMode::exact) return ScaledScalar(Rational(value));
  return ScaledScalar(ExpFloat::from_double(static_cast<double>(value)));
}

ScaledScalar ScaledScalar::from_integer(const BigInt& value, NumericMode mode) {
  if (mode == NumericMode::exact) return ScaledScalar(Rational(value));
  return ScaledScalar(ExpFloat::from_integer(value));
}

ScaledScalar ScaledScalar::from_ratio(long numerator, long denominator, NumericMode mode) {
  if (denominator == 0) throw DomainError("ScaledScalar: zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return from_rational(q, mode);
}

ScaledScalar ScaledScalar::from_rational(const Rational& value, NumericMode mode) {
  if (mode == NumericMode::exact) return ScaledScalar(value);
  return ScaledScalar(ExpFloat::from_rational(value));
}

NumericMode ScaledScalar::mode() const { return is_exact() ? NumericMode::exact : NumericMode::scaled; }

const Rational& ScaledScalar::rational() const {
  if (!is_exact()) throw DomainError("ScaledScalar: value is not exact");
  return std::get<Rational>(value_);
}

ExpFloat ScaledScalar::scaled() const {
  if (is_exact()) return ExpFloat::from_rational(std::get<Rational>(value_));
  return std::get<ExpFloat>(value_);
}

double ScaledScalar::to_double() const { return scaled().to_double(); }

std::string ScaledScalar::to_decimal(int significant) const {
  const ExpFloat value = scaled();
  // Inside the normal double range the shortest faithful route is printf.
  if (value.is_zero() || (value.exponent() < 1000 && value.exponent() > -1000)) {
    return format_double(value.to_double(), significant);
  }
  const long double log10_value =
      std::log10(static_cast<long double>(std::fabs(value.mantissa()))) +
      static_cast<long double>(value.exponent()) * std::log10(2.0L);
  long double decimal_exponent = std::floor(log10_value);
  long double decimal_mantissa = std::pow(10.0L, log10_value - decimal_exponent);
  if (decimal_mantissa >= 10.0L) {
    decimal_mantissa /= 10.0L;
    decimal_exponent += 1.0L;
  }
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%s%.*Lfe%+lld", value.sign() < 0 ? "-" : "",
                significant - 1, decimal_mantissa, static_cast<long long>(decimal_exponent));
  return buffer;
}

int ScaledScalar::sign() const {
  if (is_exact()) return sgn(std::get<Rational>(value_));
  return std::get<ExpFloat>(value_).sign();
}

ScaledScalar ScaledScalar::abs() const { return sign() < 0 ? -*this : *this; }

ScaledScalar ScaledScalar::pow(std::uint64_t power) const {
  if (!is_exact()) return ScaledScalar(std::get<ExpFloat>(value_).pow(power));
  const Rational& q = std::get<Rational>(value_);
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), power);
  mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), power);
  return ScaledScalar(std::move(out));
}

ScaledScalar ScaledScalar::in_mode(NumericMode mode) const {
  if (mode == NumericMode::scaled) return ScaledScalar(scaled());
  if (!is_exact()) throw DomainError("ScaledScalar: cannot convert a scaled value to exact");
  return *this;
}

ScaledScalar ScaledScalar::operator-() const {
  if (is_exact()) return ScaledScalar(Rational(-std::get<Rational>(value_)));
  return ScaledScalar(-std::get<ExpFloat>(value_));
}

ScaledScalar& ScaledScalar::operator+=(const ScaledScalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    std::get<Rational>(value_) += std::get<Rational>(rhs.value_);
  } else {
    value_ = scaled() + rhs.scaled();
  }
  return *this;
}

ScaledScalar& ScaledScalar::operator-=(const ScaledScalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    std::get<Rational>(value_) -= std::get<Rational>(rhs.value_);
  } else {
    value_ = scaled() - rhs.scaled();
  }
  return *this;
}

ScaledScalar& ScaledScalar::operator*=(const ScaledScalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    std::get<Rational>(value_) *= std::get<Rational>(rhs.value_);
  } else {
    value_ = scaled() * rhs.scaled();
  }
  return *this;
}

ScaledScalar& ScaledScalar::operator/=(const ScaledScalar& rhs) {
  if (rhs.is_zero()) throw DomainError("ScaledScalar: division by zero");
  if (is_exact() && rhs.is_exact()) {
    std::get<Rational>(value_) /= std::get<Rational>(rhs.value_);
  } else {
    value_ = scaled() / rhs.scaled();
  }
  return *this;
}

bool operator==(const ScaledScalar& lhs, const ScaledScalar& rhs) {
  if (lhs.is_exact() && rhs.is_exact()) {
    return std::get<Rational>(lhs.value_) == std::get<Rational>(rhs.value_);
  }
  return lhs.scaled() == rhs.scaled();
}

std::partial_ordering operator<=>(const ScaledScalar& lhs, const ScaledScalar& rhs) {
  if (lhs.is_exact() && rhs.is_exact()) {
    const int c = cmp(std::get<Rational>(lhs.value_), std::get<Rational>(rhs.value_));
    return c <=> 0;
  }
  return lhs.scaled() <=> rhs.scaled();
}

bool approx_equal(const ScaledScalar& a, const ScaledScalar& b, double rel_tol) {
  if (a.is_exact() && b.is_exact()) return a == b;
  const ExpFloat x = a.scaled();
  const ExpFloat y = b.scaled();
  const ExpFloat diff = (x - y).abs();
  const ExpFloat scale = std::max(x.abs(), y.abs(), [](const ExpFloat& p, const ExpFloat& q) {
    return p < q;
  });
  return diff <= ExpFloat::from_double(rel_tol) * scale;
}

std::ostream& operator<<(std::ostream& os, const ExpFloat& value) {
  return os << ScaledScalar(value).to_decimal();
}

std::ostream& operator<<(std::ostream& os, const ScaledScalar& value) {
  if (value.is_exact()) return os << value.rational().get_str();
  return os << value.to_decimal();
}

std::string format_double(double value, int significant) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", significant, value);
  return buffer;
}

}  // namespace shuffle_spectra
