// Quotients of polynomials with an explicit, factored denominator.
#pragma once

#include <string>
#include <vector>

#include "wilker/polyring.hpp"

namespace wilker {

/// One denominator factor poly^multiplicity. `label` names where the factor
/// came from (e.g. "v(x,3)") and survives arithmetic and substitution.
struct Factor {
  Poly poly;
  int multiplicity = 1;
  std::string label;
};

/// num / prod(factor.poly^factor.multiplicity).
///
/// Factors with a unit leading coefficient (c*pi^k) are kept monic, the
/// unit moving into the numerator; constant unit factors are absorbed
/// entirely. Sums combine over the least common multiple of the two factor
/// lists (structurally equal factors are merged), so common denominators come
/// out in the same factored shape a hand derivation would give. No polynomial
/// GCD cancellation is attempted.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(Poly numerator);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  RatFunc(T constant) : RatFunc(Poly(constant)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Poly numerator, std::vector<Factor> factors);

  static RatFunc over(Poly numerator, Poly denominator, std::string label = {});

  const Poly& numerator() const { return num_; }
  const std::vector<Factor>& factors() const { return den_; }
  /// Expanded product of the denominator factors.
  Poly denominator() const;
  bool is_zero() const { return num_.is_zero(); }

  RatFunc pow(unsigned exponent) const;

  /// Exact value at a rational point for pi-free functions.
  BigRational evaluate(const BigRational& t) const;
  RationalInterval evaluate(const RationalInterval& t, const RationalInterval& pi) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a);

 private:
  void normalize();

  Poly num_;
  std::vector<Factor> den_;
};

/// f(a + b x), factor by factor.
RatFunc rf_compose_linear(const RatFunc& f, const PiCoeff& a, const PiCoeff& b);

/// f(1/x) written as numerator / (x^lift_exponent * prod factors).
/// Numerator and each factor are reciprocal-lifted by their own degree; the
/// leftover power of x is `lift_exponent` (negative means it sits in the
/// numerator). Factors whose lift is constant are absorbed.
struct ReciprocalForm {
  Poly numerator;
  std::vector<Factor> factors;
  int lift_exponent = 0;

  RatFunc as_ratfunc() const;
};

ReciprocalForm rf_reciprocal_sub(const RatFunc& f);

}  // namespace wilker
