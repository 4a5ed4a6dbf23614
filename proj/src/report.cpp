#include "wilker/report.hpp"

#include <sstream>

namespace wilker {

namespace {

Json sign_to_json(const Sign& s) {
  return Json{{"value", to_string(s.value)}, {"pi_bits_used", s.pi_bits_used}};
}

Json side_condition_to_json(const SideConditionResult& r) {
  Json j;
  j["description"] = r.description;
  j["kind"] = r.certificate ? "poly_positive_on" : "pi_sign";
  j["verdict"] = to_string(r.verdict);
  if (r.certificate) j["certificate"] = certificate_to_json(*r.certificate);
  if (r.sign) {
    j["sign"] = sign_to_json(*r.sign);
    j["expected"] = to_string(*r.expected);
  }
  return j;
}

std::string scalar_text(const CertificateReport& r) {
  std::string s = r.scalar.to_string();
  if (r.pi_normalization_power != 0) s += "π" + superscript(r.pi_normalization_power);
  return s;
}

std::string shifted_name(const std::string& name, const BigRational& shift) {
  return name + "(x - " + shift.to_string() + ")";
}

}  // namespace

std::string_view bound_function_name(TheoremId id) {
  switch (id) {
    case TheoremId::Thm1Left: return "m";
    case TheoremId::Thm1Right: return "n";
    case TheoremId::Thm2Left: return "p";
    case TheoremId::Thm2Right: return "q";
    default: return "g";
  }
}

Json poly_to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) {
    Json terms = Json::array();
    for (const auto& [e, r] : c.terms()) terms.push_back(Json::array({e, r.to_string()}));
    out.push_back(std::move(terms));
  }
  return out;
}

Json certificate_to_json(const PositivityCertificate& cert) {
  Json j;
  j["claim_poly"] = poly_to_json(cert.claim_poly);
  j["domain_shift"] = cert.domain_shift.to_string();
  j["lifted"] = cert.lifted;
  j["lifted_shifted"] = poly_to_json(cert.lifted_shifted);
  Json signs = Json::array();
  for (const auto& s : cert.coefficient_signs) signs.push_back(to_string(s.value));
  j["coefficient_signs"] = std::move(signs);
  j["pi_normalization_power"] = cert.pi_normalization_power;
  j["verdict"] = to_string(cert.verdict);
  j["offending_index"] = cert.offending_index ? Json(*cert.offending_index) : Json(nullptr);
  j["pi_bits_used"] = cert.pi_bits_used;
  return j;
}

Json report_to_json(const CertificateReport& r) {
  Json j;
  j["theorem_id"] = to_string(r.theorem_id);
  j["shift"] = r.shift.to_string();
  j["lift_exponent"] = r.lift_exponent;
  j["scalar"] = r.scalar.to_string();
  j["pi_normalization_power"] = r.pi_normalization_power;
  j["numerator_coeffs"] = poly_to_json(r.numerator.lifted_shifted);
  Json factors = Json::array();
  for (const auto& f : r.denominator_factors) {
    Json fj;
    fj["poly"] = poly_to_json(f.poly);
    fj["multiplicity"] = f.multiplicity;
    fj["certificate"] = certificate_to_json(f.certificate);
    fj["origin"] = f.origin;
    fj["appendix_name"] = f.appendix_name.empty() ? Json(nullptr) : Json(f.appendix_name);
    fj["structural_square"] = f.structural_square;
    factors.push_back(std::move(fj));
  }
  j["denominator_factors"] = std::move(factors);
  Json sides = Json::array();
  for (const auto& s : r.side_conditions) sides.push_back(side_condition_to_json(s));
  j["side_conditions"] = std::move(sides);
  j["verdict"] = to_string(r.verdict);
  j["pi_bits_used"] = r.pi_bits_used;
  j["numerator_name"] = r.numerator_name;
  j["numerator_sign"] = r.numerator_sign;
  j["numerator_certificate"] = certificate_to_json(r.numerator);
  j["direction"] = to_string(r.direction);
  j["bound_relation"] = to_string(r.bound_relation);
  j["implies_claim"] = r.implies_claim;
  return j;
}

std::string report_to_text(const CertificateReport& r) {
  std::ostringstream out;
  const std::string g(bound_function_name(r.theorem_id));
  const std::string s = r.shift.to_string();
  out << "theorem: " << to_string(r.theorem_id) << "\n";
  out << "verdict: " << to_string(r.verdict) << "\n";

  out << g << "(1/x) = " << (r.numerator_sign < 0 ? "-" : "") << shifted_name(r.numerator_name, r.shift) << " / ("
      << scalar_text(r) << " x" << superscript(r.lift_exponent);
  for (const auto& f : r.denominator_factors) {
    const std::string name = f.appendix_name.empty() ? "[" + render(f.poly) + "]" : shifted_name(f.appendix_name, r.shift);
    out << " " << name;
    if (f.multiplicity != 1) out << superscript(f.multiplicity);
  }
  out << ")\n";
  out << "shift: " << s << "\n";
  out << "lift exponent: " << r.lift_exponent << "\n";
  out << "scalar: " << scalar_text(r) << "\n";
  out << "bound relation: " << to_string(r.bound_relation) << ", direction: " << to_string(r.direction)
      << ", implies claim: " << (r.implies_claim ? "yes" : "no") << "\n";
  out << r.numerator_name << "(x) = " << render(r.numerator.lifted_shifted) << "\n";
  out << "  " << to_string(r.numerator.verdict) << "\n";
  for (const auto& f : r.denominator_factors) {
    out << "factor " << render(f.poly);
    if (f.multiplicity != 1) out << " (multiplicity " << f.multiplicity << (f.structural_square ? ", square" : "") << ")";
    out << " from " << f.origin << "\n";
    out << "  shifted: " << render(f.certificate.lifted_shifted) << "\n";
    out << "  " << to_string(f.certificate.verdict) << "\n";
  }
  out << "side conditions:\n";
  for (const auto& c : r.side_conditions) out << "  " << c.description << ": " << to_string(c.verdict) << "\n";
  out << "pi bits used: " << r.pi_bits_used << "\n";
  return out.str();
}

}  // namespace wilker
