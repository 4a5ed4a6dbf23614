// Exact rational scalars, rational-endpoint intervals and rigorous
// enclosures of pi.
#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wilker {

/// Raised on division by zero and other undefined exact operations.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Unbounded-precision rational, always reduced with a positive denominator.
class BigRational {
 public:
  BigRational() = default;

  template <std::integral T>
  BigRational(T value)  // NOLINT(google-explicit-constructor)
      : value_(static_cast<long>(value)) {}

  BigRational(const mpz_class& numerator, const mpz_class& denominator);
  explicit BigRational(mpq_class value);

  /// Accepts "p", "p/q", decimals ("-0.02", "1.5e-3") and powers of an
  /// integer base ("2^-40").
  static BigRational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  BigRational abs() const;
  BigRational reciprocal() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;
  /// Decimal rendering rounded to `digits` fractional digits.
  std::string to_decimal(int digits = 12) const;
  double to_double() const { return value_.get_d(); }

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  friend BigRational operator-(const BigRational& value);

  friend bool operator==(const BigRational& lhs, const BigRational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const BigRational& lhs, const BigRational& rhs);

 private:
  mpq_class value_{0};
};

/// Integer power; a negative exponent requires a nonzero base.
BigRational pow(const BigRational& base, int exponent);

BigRational min(const BigRational& a, const BigRational& b);
BigRational max(const BigRational& a, const BigRational& b);

/// Largest (smallest) multiple of 2^-bits not above (not below) `value`.
BigRational floor_dyadic(const BigRational& value, int bits);
BigRational ceil_dyadic(const BigRational& value, int bits);

/// 2^exponent for any integer exponent.
BigRational power_of_two(int exponent);

/// Closed interval [lo, hi] with exact rational endpoints. Every operation
/// returns an interval containing all results of the pointwise operation.
class RationalInterval {
 public:
  RationalInterval() = default;
  RationalInterval(BigRational point);  // NOLINT(google-explicit-constructor)
  RationalInterval(BigRational lo, BigRational hi);

  const BigRational& lo() const { return lo_; }
  const BigRational& hi() const { return hi_; }
  BigRational width() const { return hi_ - lo_; }
  BigRational midpoint() const { return (lo_ + hi_) / 2; }

  bool is_point() const { return lo_ == hi_; }
  bool contains(const BigRational& value) const { return lo_ <= value && value <= hi_; }
  bool contains(const RationalInterval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool strictly_positive() const { return lo_.sign() > 0; }
  bool strictly_negative() const { return hi_.sign() < 0; }

  /// Endpoints rounded outward onto the grid of multiples of 2^-bits.
  RationalInterval outward(int bits) const;

  RationalInterval sqr() const;
  RationalInterval reciprocal() const;

  friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator/(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator-(const RationalInterval& a);

  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;

  /// Strict orderings that hold for every pair of members.
  friend bool certainly_less(const RationalInterval& a, const RationalInterval& b) {
    return a.hi_ < b.lo_;
  }

  std::string to_string() const;

 private:
  BigRational lo_;
  BigRational hi_;
};

/// Integer power of an interval (negative exponents need 0 outside).
RationalInterval pow(const RationalInterval& base, int exponent);

/// Enclosure [lo, hi] of pi with lo < pi < hi and hi - lo <= 2^-precision_bits.
/// Results for larger precisions are contained in results for smaller ones.
/// Computed from Machin's formula pi = 16 atan(1/5) - 4 atan(1/239) with
/// alternating-series remainder bounds; endpoints are dyadic.
RationalInterval pi_enclosure(int precision_bits);

}  // namespace wilker
