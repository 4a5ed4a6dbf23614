#include "wilker/envelope.hpp"

#include <optional>
#include <string>

namespace wilker {

namespace {

BigRational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return BigRational(f, 1);
}

// Partial sums are tightened at most this many times before giving up.
constexpr int kMaxRefinements = 64;
constexpr int kMaxOrder = 4096;

// Bracket of an alternating series sum_k (-1)^k x^(2k+offset)/(2k+offset)!
// by consecutive partial sums, refined until the gap is <= width.
RationalInterval alternating_bracket(const BigRational& x, int offset, const BigRational& width) {
  const BigRational x2 = x * x;
  BigRational term = offset == 0 ? BigRational(1) : x;
  BigRational sum = term;
  std::optional<BigRational> lower;  // odd order partial sums
  BigRational upper = sum;           // even order partial sums
  for (int k = 1; k <= kMaxOrder; ++k) {
    const int a = 2 * k + offset;
    term = -term * x2 / BigRational((a - 1) * a);
    sum += term;
    if (k % 2 == 1) {
      lower = sum;
    } else {
      upper = sum;
    }
    if (lower && upper - *lower <= width) return {*lower, upper};
  }
  throw DomainError("truncation order limit reached at x = " + x.to_string());
}

}  // namespace

Poly sin_truncation(int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  std::vector<PiCoeff> c(static_cast<size_t>(2 * order + 2));
  for (int k = 0; k <= order; ++k) {
    BigRational term = factorial(2 * k + 1).reciprocal();
    c[static_cast<size_t>(2 * k + 1)] = PiCoeff(k % 2 == 0 ? term : -term);
  }
  return Poly(std::move(c));
}

Poly cos_truncation(int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  std::vector<PiCoeff> c(static_cast<size_t>(2 * order + 1));
  for (int k = 0; k <= order; ++k) {
    BigRational term = factorial(2 * k).reciprocal();
    c[static_cast<size_t>(2 * k)] = PiCoeff(k % 2 == 0 ? term : -term);
  }
  return Poly(std::move(c));
}

Truncation truncation(TrigKind kind, int order) {
  return {kind, order, kind == TrigKind::Sin ? sin_truncation(order) : cos_truncation(order)};
}

void require_first_quadrant(const BigRational& x) {
  if (x.sign() <= 0) throw DomainError("x = " + x.to_string() + " is not in (0, pi/2)");
  for (int bits : {32, 64, 128, 256, 512}) {
    if (x < pi_enclosure(bits).lo() / 2) return;
  }
  throw DomainError("x = " + x.to_string() + " cannot be certified below pi/2");
}

BigRational truncation_gap(TrigKind kind, const BigRational& x, int n) {
  const Poly upper = kind == TrigKind::Sin ? sin_truncation(2 * n) : cos_truncation(2 * n);
  const Poly lower = kind == TrigKind::Sin ? sin_truncation(2 * n + 1) : cos_truncation(2 * n + 1);
  return upper.evaluate(x) - lower.evaluate(x);
}

SinCos rigorous_sin_cos(const BigRational& x, const BigRational& target_width) {
  require_first_quadrant(x);
  if (target_width.sign() <= 0) throw std::invalid_argument("target width must be positive");
  return {alternating_bracket(x, 1, target_width), alternating_bracket(x, 0, target_width)};
}

RationalInterval rigorous_trig(TrigFunction f, const BigRational& x, const BigRational& target_width) {
  if (f == TrigFunction::Sin) return rigorous_sin_cos(x, target_width).sin;
  if (f == TrigFunction::Cos) return rigorous_sin_cos(x, target_width).cos;

  BigRational inner = target_width;
  for (int i = 0; i < kMaxRefinements; ++i) {
    SinCos sc = rigorous_sin_cos(x, inner);
    if (sc.cos.contains_zero()) {
      // Only possible for x extremely close to pi/2; keep refining.
      inner /= power_of_two(8);
      continue;
    }
    RationalInterval q = f == TrigFunction::Tan ? sc.sin / sc.cos : sc.cos / sc.sin;
    if (q.width() <= target_width) return q;
    inner /= power_of_two(8);
  }
  throw DomainError("cosine enclosure does not separate from 0 at x = " + x.to_string() +
                    "; raise the precision or move x away from pi/2");
}

}  // namespace wilker
