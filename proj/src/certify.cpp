#include "wilker/certify.hpp"

#include <algorithm>
#include <stdexcept>

namespace wilker {

Sign decide_sign(const PiCoeff& c, int max_bits) {
  if (max_bits < 8) throw std::invalid_argument("decide_sign needs max_bits >= 8");
  if (c.is_zero()) return {SignValue::Zero, 0};
  if (c.is_monomial()) {
    // pi^k > 0, so the rational factor decides.
    return {c.terms().begin()->second.sign() > 0 ? SignValue::Positive : SignValue::Negative, 0};
  }
  int bits = 8;
  for (;;) {
    const RationalInterval value = c.enclose(pi_enclosure(bits));
    if (value.strictly_positive()) return {SignValue::Positive, bits};
    if (value.strictly_negative()) return {SignValue::Negative, bits};
    if (bits >= max_bits) return {SignValue::Unknown, bits};
    bits = std::min(bits * 2, max_bits);
  }
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Proven: return "Proven";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

PositivityCertificate certify_shifted(const Poly& claim, Poly base, const BigRational& s, bool lifted,
                                      int max_bits) {
  if (s.sign() < 0) throw std::invalid_argument("positivity shift must be nonnegative");
  PositivityCertificate cert;
  cert.claim_poly = claim;
  cert.domain_shift = s;
  cert.lifted = lifted;
  Poly shifted = compose_linear(base, PiCoeff(s), PiCoeff(1));
  cert.pi_normalization_power = std::max(0, -shifted.min_pi_exponent());
  cert.lifted_shifted = shifted.shifted_pi(cert.pi_normalization_power);

  bool any_positive = false;
  bool any_negative = false;
  std::optional<int> first_unknown;
  std::optional<int> first_negative;
  std::optional<int> first_positive;
  for (int k = 0; k <= cert.lifted_shifted.degree(); ++k) {
    Sign sign = decide_sign(cert.lifted_shifted.coeff(k), max_bits);
    cert.pi_bits_used = std::max(cert.pi_bits_used, sign.pi_bits_used);
    switch (sign.value) {
      case SignValue::Positive:
        any_positive = true;
        if (!first_positive) first_positive = k;
        break;
      case SignValue::Negative:
        any_negative = true;
        if (!first_negative) first_negative = k;
        break;
      case SignValue::Unknown:
        if (!first_unknown) first_unknown = k;
        break;
      case SignValue::Zero:
        break;
    }
    cert.coefficient_signs.push_back(sign);
  }

  if (first_unknown) {
    cert.verdict = Verdict::Inconclusive;
    cert.offending_index = first_unknown;
  } else if (any_positive && !any_negative) {
    cert.verdict = Verdict::Proven;
  } else if (!any_positive) {
    // Every coefficient <= 0: the polynomial is <= 0 on the whole domain.
    cert.verdict = Verdict::Refuted;
    cert.offending_index = first_negative.value_or(0);
  } else {
    cert.verdict = Verdict::Inconclusive;
    cert.offending_index = first_negative;
  }
  return cert;
}

BigRational rational_content(const Poly& p) {
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& c : p.coeffs())
    for (const auto& [e, r] : c.terms()) {
      mpz_class n = r.numerator();
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
      mpz_class d = r.denominator();
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
  if (num_gcd == 0) return BigRational(1);
  return BigRational(num_gcd, den_lcm);
}

std::string appendix_factor_name(const std::string& origin, TheoremId id) {
  if (id != TheoremId::Thm1Left && id != TheoremId::Thm1Right) return {};
  if (origin == "v(x,4)") return "B";
  if (origin == "v(x,3)") return "C";
  return {};
}

}  // namespace

PositivityCertificate prove_positive_on(const Poly& p, const BigRational& s, int max_bits) {
  const int n = std::max(p.degree(), 0);
  return certify_shifted(p, reciprocal_lift(p, n), s, /*lifted=*/true, max_bits);
}

PositivityCertificate prove_positive_beyond(const Poly& p, const BigRational& s, int max_bits) {
  return certify_shifted(p, p, s, /*lifted=*/false, max_bits);
}

PrimitiveForm primitive_form(const Poly& p, int max_bits) {
  PrimitiveForm out;
  if (p.is_zero()) {
    out.unit_rational = BigRational(1);
    out.leading_sign = {SignValue::Zero, 0};
    return out;
  }
  const int pi_shift = -p.min_pi_exponent();
  Poly cleared = p.shifted_pi(pi_shift);
  const BigRational content = rational_content(cleared);
  cleared = cleared.scaled(PiCoeff(content.reciprocal()));
  out.leading_sign = decide_sign(cleared.leading(), max_bits);
  BigRational unit = content;
  if (out.leading_sign.value == SignValue::Negative) {
    cleared = -cleared;
    unit = -unit;
  }
  out.primitive = std::move(cleared);
  out.unit_rational = unit;
  out.unit_pi_exponent = -pi_shift;
  return out;
}

SideConditionResult check_side_condition(const SideCondition& condition, int max_bits) {
  SideConditionResult result;
  result.description = condition.description;
  if (const auto* positive = std::get_if<SideCondition::PolyPositiveOn>(&condition.kind)) {
    result.certificate = prove_positive_on(positive->poly, positive->shift, max_bits);
    result.verdict = result.certificate->verdict;
  } else {
    const auto& pi_sign = std::get<SideCondition::PiSign>(condition.kind);
    result.sign = decide_sign(pi_sign.value, max_bits);
    result.expected = pi_sign.expected;
    if (result.sign->value == pi_sign.expected) {
      result.verdict = Verdict::Proven;
    } else if (result.sign->value == SignValue::Unknown) {
      result.verdict = Verdict::Inconclusive;
    } else {
      result.verdict = Verdict::Refuted;
    }
  }
  return result;
}

CertificateReport verify_inequality(const InequalitySpec& spec, int max_bits) {
  if (spec.numeric_only || !spec.bound_difference) {
    throw std::invalid_argument(std::string(to_string(spec.id)) + " has no symbolic certificate");
  }
  const auto start = std::chrono::steady_clock::now();

  CertificateReport report;
  report.theorem_id = spec.id;
  report.shift = spec.shift;
  report.direction = spec.direction;
  report.bound_relation = spec.bound_relation;
  report.numerator_name = spec.numerator_name;

  for (const auto& condition : spec.side_conditions) {
    report.side_conditions.push_back(check_side_condition(condition, max_bits));
  }

  const ReciprocalForm form = rf_reciprocal_sub(*spec.bound_difference);
  report.lift_exponent = form.lift_exponent;

  // g(1/x) = U * Ntilde / (x^e prod Ftilde^m) with U = uN / prod uF^m.
  const PrimitiveForm num = primitive_form(form.numerator, max_bits);
  BigRational unit_rational = num.unit_rational;
  int unit_pi = num.unit_pi_exponent;
  bool leading_decided = num.leading_sign.value != SignValue::Unknown;

  for (const auto& factor : form.factors) {
    PrimitiveForm f = primitive_form(factor.poly, max_bits);
    leading_decided = leading_decided && f.leading_sign.value != SignValue::Unknown;
    unit_rational /= pow(f.unit_rational, factor.multiplicity);
    unit_pi -= f.unit_pi_exponent * factor.multiplicity;

    DenominatorFactorReport entry;
    entry.multiplicity = factor.multiplicity;
    entry.origin = factor.label;
    entry.appendix_name = appendix_factor_name(factor.label, spec.id);
    entry.structural_square = factor.multiplicity % 2 == 0;
    entry.certificate = prove_positive_beyond(f.primitive, spec.shift, max_bits);
    entry.poly = std::move(f.primitive);
    report.denominator_factors.push_back(std::move(entry));
  }

  report.numerator_sign = unit_rational.sign() < 0 ? -1 : 1;
  report.scalar = unit_rational.abs().reciprocal();
  report.pi_normalization_power = -unit_pi;
  report.numerator = prove_positive_beyond(num.primitive, spec.shift, max_bits);

  int bits = std::max(num.leading_sign.pi_bits_used, report.numerator.pi_bits_used);
  bool all_proven = leading_decided && report.numerator.verdict == Verdict::Proven;
  for (const auto& f : report.denominator_factors) {
    bits = std::max(bits, f.certificate.pi_bits_used);
    all_proven = all_proven && f.certificate.verdict == Verdict::Proven;
  }
  for (const auto& c : report.side_conditions) {
    if (c.certificate) bits = std::max(bits, c.certificate->pi_bits_used);
    if (c.sign) bits = std::max(bits, c.sign->pi_bits_used);
    all_proven = all_proven && c.verdict == Verdict::Proven;
  }
  report.pi_bits_used = bits;

  const int required_sign = spec.direction == Direction::MustBeNegative ? -1 : 1;
  if (!all_proven) {
    report.verdict = Verdict::Inconclusive;
  } else if (report.numerator_sign == required_sign) {
    report.verdict = Verdict::Proven;
  } else {
    report.verdict = Verdict::Refuted;
  }

  const bool sound_direction =
      (spec.direction == Direction::MustBeNegative && spec.bound_relation == BoundRelation::Upper) ||
      (spec.direction == Direction::MustBePositive && spec.bound_relation == BoundRelation::Lower);
  report.implies_claim = report.verdict == Verdict::Proven && sound_direction;

  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace wilker
