// Taylor truncations of sine and cosine and rigorous trig enclosures.
//
// For 0 < x < pi/2 and every n >= 0 the partial sums bracket the function:
//   u(x, 2n+1) < sin x < u(x, 2n),   v(x, 2n+1) < cos x < v(x, 2n),
// where u(x,p) = sum_{k<=p} (-1)^k x^(2k+1)/(2k+1)! and
//       v(x,q) = sum_{k<=q} (-1)^k x^(2k)/(2k)!.
// These alternating-series bounds are taken as axioms of the prover.
#pragma once

#include <utility>

#include "wilker/exactnum.hpp"
#include "wilker/polyring.hpp"

namespace wilker {

enum class TrigKind { Sin, Cos };
enum class TrigFunction { Sin, Cos, Tan, Cot };
enum class BoundSide { Lower, Upper };

/// Error for points outside the certified domain (0, pi/2) or for requests
/// that cannot be met at the reachable truncation orders.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Truncation {
  TrigKind kind;
  int order;
  Poly poly;

  /// Odd orders bound from below, even orders from above, on (0, pi/2).
  BoundSide side() const { return order % 2 == 1 ? BoundSide::Lower : BoundSide::Upper; }
};

Truncation truncation(TrigKind kind, int order);

/// u(x, p) and v(x, q) as polynomials.
Poly sin_truncation(int order);
Poly cos_truncation(int order);

/// Enclosures of sin x and cos x of width at most `target_width` each.
struct SinCos {
  RationalInterval sin;
  RationalInterval cos;
};

/// Throws DomainError unless 0 < x < pi/2 can be certified.
void require_first_quadrant(const BigRational& x);

SinCos rigorous_sin_cos(const BigRational& x, const BigRational& target_width);

/// Enclosure of f(x) with width <= target_width. Tan and cot are formed by
/// dividing the sine and cosine enclosures, tightening those until the
/// quotient is narrow enough.
RationalInterval rigorous_trig(TrigFunction f, const BigRational& x, const BigRational& target_width);

/// Gap u(x,2n) - u(x,2n+1) (or the cosine analogue) at a rational point.
BigRational truncation_gap(TrigKind kind, const BigRational& x, int n);

}  // namespace wilker
