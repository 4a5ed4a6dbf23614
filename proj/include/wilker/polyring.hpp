// The coefficient ring Q[pi, 1/pi] and dense univariate polynomials over it.
#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wilker/exactnum.hpp"

namespace wilker {

/// Laurent polynomial in the symbol pi with rational coefficients.
/// Stored sparsely; zero entries never appear, so zero is the empty map.
class PiCoeff {
 public:
  PiCoeff() = default;
  PiCoeff(BigRational constant);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  PiCoeff(T constant) : PiCoeff(BigRational(constant)) {}  // NOLINT(google-explicit-constructor)

  static PiCoeff monomial(const BigRational& coefficient, int pi_exponent);
  static PiCoeff pi() { return monomial(BigRational(1), 1); }

  const std::map<int, BigRational>& terms() const { return terms_; }
  BigRational coefficient(int pi_exponent) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::optional<BigRational> rational_value() const;

  /// Smallest / largest pi exponent; 0 for the zero element.
  int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  /// Multiplicative inverse; only monomials c*pi^k are units.
  std::optional<PiCoeff> inverse() const;

  /// Multiply by pi^k.
  PiCoeff shifted(int k) const;
  PiCoeff scaled(const BigRational& factor) const;

  /// Interval containing the value for every pi in `pi`. Negative exponents
  /// need 0 outside `pi`; the enclosure assumes `pi` is positive.
  RationalInterval enclose(const RationalInterval& pi) const;

  /// Terms by increasing pi exponent, e.g. "172800π⁴ - 17280π⁶".
  std::string to_string() const;

  PiCoeff& operator+=(const PiCoeff& rhs);
  PiCoeff& operator-=(const PiCoeff& rhs);
  friend PiCoeff operator+(PiCoeff lhs, const PiCoeff& rhs) { return lhs += rhs; }
  friend PiCoeff operator-(PiCoeff lhs, const PiCoeff& rhs) { return lhs -= rhs; }
  friend PiCoeff operator*(const PiCoeff& lhs, const PiCoeff& rhs);
  friend PiCoeff operator-(const PiCoeff& value) { return value.scaled(BigRational(-1)); }
  friend bool operator==(const PiCoeff&, const PiCoeff&) = default;

 private:
  void add_term(int exponent, const BigRational& value);

  std::map<int, BigRational> terms_;
};

/// Dense polynomial in x over PiCoeff. Trailing zero coefficients are
/// trimmed, so the leading coefficient is nonzero unless the polynomial is 0.
class Poly {
 public:
  Poly() = default;
  Poly(PiCoeff constant);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  Poly(T constant) : Poly(PiCoeff(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<PiCoeff> coeffs);

  static Poly x() { return monomial(PiCoeff(1), 1); }
  static Poly monomial(PiCoeff coefficient, int degree);
  static Poly from_rationals(std::span<const BigRational> coeffs);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const PiCoeff> coeffs() const { return coeffs_; }
  const PiCoeff& coeff(int k) const;
  const PiCoeff& leading() const;

  bool is_pi_free() const;
  /// Smallest pi exponent over all coefficients (0 for the zero polynomial).
  int min_pi_exponent() const;

  Poly scaled(const PiCoeff& factor) const;
  Poly shifted_pi(int k) const;
  Poly pow(unsigned exponent) const;

  PiCoeff evaluate(const PiCoeff& point) const;
  /// Exact value at a rational point; requires a pi-free polynomial.
  BigRational evaluate(const BigRational& point) const;
  RationalInterval evaluate(const RationalInterval& x, const RationalInterval& pi) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator-(const Poly& value) { return value.scaled(PiCoeff(-1)); }
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  std::vector<PiCoeff> coeffs_;
};

/// q(x) = p(a + b x), exact.
Poly compose_linear(const Poly& p, const PiCoeff& a, const PiCoeff& b);

/// q(x) = x^n p(1/x); throws std::invalid_argument when n < deg p.
Poly reciprocal_lift(const Poly& p, int n);

/// Interval evaluation; same as Poly::evaluate but a free function to match
/// the other transforms.
RationalInterval poly_eval(const Poly& p, const RationalInterval& x, const RationalInterval& pi);

/// Appendix-style rendering: ascending powers from x¹, constant term last,
/// e.g. "2940x + 8670x² + 389". Multi-term coefficients are parenthesised.
std::string render(const Poly& p);

/// Unicode superscript for an integer exponent.
std::string superscript(int exponent);

}  // namespace wilker
