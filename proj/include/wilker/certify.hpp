// Sign decisions for pi-polynomials and coefficient-positivity certificates.
#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "wilker/theorems.hpp"

namespace wilker {

inline constexpr int kDefaultMaxBits = 256;

struct Sign {
  SignValue value = SignValue::Unknown;
  /// Precision of the pi enclosure that decided the sign (0: decided exactly).
  int pi_bits_used = 0;
};

/// Sign of c at pi, refining the pi enclosure 8, 16, 32, ... bits up to
/// max_bits. Rational and single-term coefficients are decided exactly.
Sign decide_sign(const PiCoeff& c, int max_bits = kDefaultMaxBits);

enum class Verdict { Proven, Refuted, Inconclusive };
std::string_view to_string(Verdict v);

/// Evidence that a polynomial keeps one sign on a half-line.
///
/// With `lifted` the claim is p(t) > 0 for t in (0, 1/s) (all t > 0 when
/// s = 0): L(x) = x^deg p(1/x) is shifted to L(x + s). Without it the claim
/// is p(x) > 0 for x > s and p itself is shifted. Either way, nonnegative
/// shifted coefficients with one positive prove the claim. The converse
/// does not hold: Inconclusive does not disprove anything.
struct PositivityCertificate {
  Poly claim_poly;
  BigRational domain_shift;
  bool lifted = true;
  Poly lifted_shifted;
  std::vector<Sign> coefficient_signs;
  int pi_normalization_power = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<int> offending_index;
  int pi_bits_used = 0;
};

PositivityCertificate prove_positive_on(const Poly& p, const BigRational& s, int max_bits = kDefaultMaxBits);
PositivityCertificate prove_positive_beyond(const Poly& p, const BigRational& s,
                                            int max_bits = kDefaultMaxBits);

struct SideConditionResult {
  std::string description;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<PositivityCertificate> certificate;
  std::optional<Sign> sign;
  std::optional<SignValue> expected;
};

SideConditionResult check_side_condition(const SideCondition& condition, int max_bits = kDefaultMaxBits);

struct DenominatorFactorReport {
  /// Primitive integer form of the reciprocal-lifted factor, positive lead.
  Poly poly;
  int multiplicity = 1;
  std::string origin;
  std::string appendix_name;
  bool structural_square = false;
  PositivityCertificate certificate;
};

/// Outcome of verify_inequality. The bound function g satisfies
///   g(1/x) = numerator_sign * N(x - shift) / (scalar * pi^k * x^lift * prod F_i(x)^m_i)
/// with N = numerator.lifted_shifted and k = pi_normalization_power.
struct CertificateReport {
  TheoremId theorem_id{};
  BigRational shift;
  int lift_exponent = 0;
  BigRational scalar;
  int pi_normalization_power = 0;
  int numerator_sign = 1;
  std::string numerator_name;
  PositivityCertificate numerator;
  std::vector<DenominatorFactorReport> denominator_factors;
  std::vector<SideConditionResult> side_conditions;
  Verdict verdict = Verdict::Inconclusive;
  int pi_bits_used = 0;
  Direction direction = Direction::MustBeNegative;
  BoundRelation bound_relation = BoundRelation::Upper;
  /// True when the certified sign of the bound function implies the claimed
  /// sign of the true difference.
  bool implies_claim = false;
  std::chrono::nanoseconds elapsed{0};
};

/// Runs the full pipeline on a symbolic spec; throws std::invalid_argument
/// for numeric-only specs.
CertificateReport verify_inequality(const InequalitySpec& spec, int max_bits = kDefaultMaxBits);

/// p = unit * primitive with primitive having integer coefficients of gcd 1,
/// smallest pi exponent 0 and a leading coefficient of decided positive sign
/// (when decidable). unit = unit_rational * pi^unit_pi_exponent.
struct PrimitiveForm {
  Poly primitive;
  BigRational unit_rational;
  int unit_pi_exponent = 0;
  Sign leading_sign;
};

PrimitiveForm primitive_form(const Poly& p, int max_bits = kDefaultMaxBits);

}  // namespace wilker
