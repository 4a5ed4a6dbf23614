#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "reference_coefficients.hpp"
#include "test_support.hpp"
#include "wilker/certify.hpp"
#include "wilker/report.hpp"

using namespace wilker;
using wilker::testing::Rng;

namespace {

PiCoeff pi_term(long c, int e) { return PiCoeff::monomial(BigRational(c), e); }

const CertificateReport& cached(TheoremId id) {
  static std::map<TheoremId, CertificateReport> reports;
  auto it = reports.find(id);
  if (it == reports.end()) it = reports.emplace(id, verify_inequality(build_spec(id))).first;
  return it->second;
}

const DenominatorFactorReport* factor_named(const CertificateReport& r, const std::string& name) {
  for (const auto& f : r.denominator_factors)
    if (f.appendix_name == name) return &f;
  return nullptr;
}

// Compares against the reference coefficient list; returns a mismatch
// description per differing position (empty when identical).
std::vector<std::string> reference_mismatches(const Poly& computed, const std::vector<std::string_view>& reference) {
  std::vector<std::string> out;
  const size_t n = std::max(reference.size(), static_cast<size_t>(computed.degree() + 1));
  for (size_t k = 0; k < n; ++k) {
    const std::string mine = static_cast<int>(k) <= computed.degree() ? computed.coeff(static_cast<int>(k)).to_string() : "0";
    const std::string theirs = k < reference.size() ? std::string(reference[k]) : "0";
    if (mine != theirs) out.push_back("x^" + std::to_string(k) + ": computed " + mine + ", reference " + theirs);
  }
  return out;
}

}  // namespace

TEST_CASE("decide_sign examples") {
  const PiCoeff e12 = pi_term(172800, 4) - pi_term(17280, 6);
  const Sign s = decide_sign(e12);
  CHECK(s.value == SignValue::Positive);
  CHECK(s.pi_bits_used <= 32);

  const PiCoeff f12 = pi_term(5253120, 6) - pi_term(58060800, 4) + pi_term(69120, 8);
  CHECK(decide_sign(f12).value == SignValue::Positive);
  CHECK(decide_sign(f12, 8).value != SignValue::Negative);

  CHECK(decide_sign(PiCoeff()).value == SignValue::Zero);
  CHECK(decide_sign(PiCoeff(BigRational(-3, 7))).value == SignValue::Negative);
  CHECK(decide_sign(PiCoeff(BigRational(-3, 7))).pi_bits_used == 0);
  CHECK_THROWS(decide_sign(e12, 7));
}

TEST_CASE("decide_sign reports Unknown at the cap for near-cancellation") {
  // 833719 - 265381 pi is about 2.3e-6 and needs roughly 40 bits.
  const PiCoeff c = PiCoeff(833719) - pi_term(265381, 1);
  const Sign coarse = decide_sign(c, 16);
  CHECK(coarse.value == SignValue::Unknown);
  CHECK(coarse.pi_bits_used == 16);
  CHECK(decide_sign(c, 256).value == wilker::testing::oracle_sign(c));
}

TEST_CASE("decide_sign agrees with the 100-digit oracle") {
  Rng rng(401);
  const std::vector<std::pair<long, long>> convergents = {{22, 7},         {333, 106},       {355, 113},
                                                          {103993, 33102}, {104348, 33215},  {208341, 66317},
                                                          {312689, 99532}, {833719, 265381}, {1146408, 364913}};
  const BigRational threshold = BigRational::parse("1e-20");
  int checked = 0;
  for (int i = 0; checked < 50; ++i) {
    PiCoeff c;
    if (i % 3 == 0) {
      const auto [p, q] = convergents[static_cast<size_t>(rng.integer(0, static_cast<long>(convergents.size()) - 1))];
      const long scale = rng.integer(1, 9) * (rng.integer(0, 1) == 0 ? 1 : -1);
      const int e = static_cast<int>(rng.integer(-3, 3));
      c = (PiCoeff(p) - pi_term(q, 1)).shifted(e).scaled(BigRational(scale));
    } else {
      c = rng.pi_coeff(5, -4, 8);
    }
    if (wilker::testing::at_pi100(c).abs() <= threshold) continue;
    ++checked;
    const Sign s = decide_sign(c, 256);
    CHECK(s.value == wilker::testing::oracle_sign(c));
  }
}

TEST_CASE("decide_sign never flips as the cap grows") {
  Rng rng(402);
  for (int i = 0; i < 60; ++i) {
    const PiCoeff c = i % 2 == 0 ? rng.pi_coeff(4, -2, 6) : PiCoeff(103993) - pi_term(33102, 1);
    std::optional<SignValue> decided;
    for (int bits : {8, 16, 24, 32, 64, 128}) {
      const SignValue v = decide_sign(c, bits).value;
      if (v == SignValue::Unknown) {
        CHECK_FALSE(decided.has_value());
        continue;
      }
      if (decided) CHECK(*decided == v);
      decided = v;
    }
  }
}

TEST_CASE("prove_positive_on examples") {
  const Poly x = Poly::x();
  const PositivityCertificate trivial = prove_positive_on(Poly(1) + x, BigRational(0));
  CHECK(trivial.verdict == Verdict::Proven);
  CHECK(trivial.lifted_shifted == Poly(1) + x);

  const PositivityCertificate half = prove_positive_on(x - Poly(PiCoeff(BigRational(1, 2))), BigRational(1));
  CHECK(half.verdict != Verdict::Proven);
  CHECK(half.offending_index.has_value());

  // Lift then shift by 3 gives a mixed-sign polynomial: the certificate does
  // not close although the claim is true on (0, 1/3).
  const Poly u2 = Poly(120) * x.pow(4) - Poly(20) * x * x + Poly(1);
  const PositivityCertificate lifted = prove_positive_on(u2, BigRational(3));
  CHECK(lifted.lifted_shifted == x.pow(4) + Poly(12) * x.pow(3) + Poly(34) * x * x - Poly(12) * x + Poly(21));
  CHECK(lifted.verdict == Verdict::Inconclusive);
  CHECK(lifted.offending_index == 1);
  for (int k = 1; k < 1000; ++k) CHECK(u2.evaluate(BigRational(k, 3000)).sign() > 0);

  // Shifting without the lift closes: 120x^4 + 1440x^3 + 6460x^2 + 12840x + 9541.
  const PositivityCertificate beyond = prove_positive_beyond(u2, BigRational(3));
  CHECK(beyond.verdict == Verdict::Proven);
  CHECK(beyond.lifted_shifted.coeff(0) == PiCoeff(9541));

  const PositivityCertificate negative = prove_positive_on(Poly(-1) - x, BigRational(0));
  CHECK(negative.verdict == Verdict::Refuted);
  CHECK_THROWS(prove_positive_on(x, BigRational(-1)));
}

TEST_CASE("Proven certificates are sound at random points") {
  Rng rng(403);
  int proven = 0;
  for (int i = 0; i < 200 && proven < 30; ++i) {
    Poly p = rng.poly(6, i % 3 == 0);
    const BigRational s(rng.integer(0, 4));
    const PositivityCertificate cert = prove_positive_on(p, s);
    if (cert.verdict != Verdict::Proven) continue;
    ++proven;
    const RationalInterval pi = pi_enclosure(128);
    const BigRational hi = s.is_zero() ? BigRational(1000) : s.reciprocal();
    for (int k = 0; k < 200; ++k) {
      const BigRational t = rng.inside(BigRational(0), hi, 100003);
      CHECK(p.evaluate(RationalInterval(t), pi).strictly_positive());
    }
  }
  CHECK(proven >= 10);
}

TEST_CASE("thm1_left reconstructs A, B, C and the scalar") {
  const CertificateReport& r = cached(TheoremId::Thm1Left);
  CHECK(r.verdict == Verdict::Proven);
  CHECK(r.scalar == BigRational(76204800));
  CHECK(r.pi_normalization_power == 0);
  CHECK(r.lift_exponent == 12);
  CHECK(r.numerator_sign == -1);
  CHECK(r.implies_claim);
  CHECK(r.numerator_name == "A");
  CHECK(r.numerator.lifted_shifted == wilker::testing::from_oracle(oracle::A));
  CHECK(r.numerator_sign == oracle::A_sign);

  const auto* b = factor_named(r, "B");
  const auto* c = factor_named(r, "C");
  REQUIRE(b != nullptr);
  REQUIRE(c != nullptr);
  CHECK(b->certificate.lifted_shifted == wilker::testing::from_oracle(oracle::B));
  CHECK(c->certificate.lifted_shifted == wilker::testing::from_oracle(oracle::C));
  CHECK(render(c->certificate.lifted_shifted) == "2940x + 8670x² + 12960x³ + 10440x⁴ + 4320x⁵ + 720x⁶ + 389");

  for (const auto& [name, poly, reference] :
       {std::tuple{"A", r.numerator.lifted_shifted, reference::A},
        std::tuple{"B", b->certificate.lifted_shifted, reference::B},
        std::tuple{"C", c->certificate.lifted_shifted, reference::C}}) {
    const auto diff = reference_mismatches(poly, reference);
    for (const auto& d : diff) MESSAGE(name << " " << d);
    CHECK(diff.empty());
  }
}

TEST_CASE("thm1_right reconstructs D and the scalar") {
  const CertificateReport& r = cached(TheoremId::Thm1Right);
  CHECK(r.verdict == Verdict::Proven);
  CHECK(r.scalar == BigRational::parse("38775788043632640000"));
  CHECK(r.lift_exponent == 24);
  CHECK(r.numerator_name == "D");
  CHECK(r.numerator.lifted_shifted == wilker::testing::from_oracle(oracle::D));
  CHECK(r.numerator_sign == oracle::D_sign);
  CHECK(r.bound_relation == BoundRelation::Lower);
  CHECK_FALSE(r.implies_claim);
  const auto diff = reference_mismatches(r.numerator.lifted_shifted, reference::D);
  for (const auto& d : diff) MESSAGE("D " << d);
  CHECK(diff.empty());
}

TEST_CASE("thm2 certificates reconstruct E and F") {
  const CertificateReport& left = cached(TheoremId::Thm2Left);
  CHECK(left.verdict == Verdict::Proven);
  CHECK(left.scalar == BigRational(2));
  CHECK(left.pi_normalization_power == 5);
  CHECK(left.lift_exponent == 5);
  CHECK(left.numerator.lifted_shifted == wilker::testing::from_oracle(oracle::E));
  CHECK(left.numerator_sign == oracle::E_sign);
  const Poly& e = left.numerator.lifted_shifted;
  CHECK(e.coeff(12) == pi_term(172800, 4) - pi_term(17280, 6));
  CHECK(e.coeff(11) == pi_term(6220800, 4) - pi_term(921600, 3) + pi_term(99840, 5) - pi_term(622080, 6) -
                           pi_term(960, 7));

  const CertificateReport& right = cached(TheoremId::Thm2Right);
  CHECK(right.verdict == Verdict::Proven);
  CHECK(right.scalar == BigRational(144));
  CHECK(right.pi_normalization_power == 6);
  CHECK(right.lift_exponent == 6);
  CHECK(right.numerator.lifted_shifted == wilker::testing::from_oracle(oracle::F));
  CHECK(right.numerator_sign == oracle::F_sign);
  CHECK(right.numerator.lifted_shifted.coeff(12) == pi_term(5253120, 6) - pi_term(58060800, 4) + pi_term(69120, 8));

  for (const auto* r : {&left, &right}) {
    for (const auto& s : r->numerator.coefficient_signs) CHECK(s.value == SignValue::Positive);
  }
}

TEST_CASE("thm2_right denominator carries the recorded square") {
  const CertificateReport& r = cached(TheoremId::Thm2Right);
  const Poly x = Poly::x();
  const Poly pix_minus_2 = Poly::monomial(PiCoeff::pi(), 1) - Poly(2);
  bool saw_square = false, saw_u1 = false, saw_u2 = false;
  for (const auto& f : r.denominator_factors) {
    CHECK(f.certificate.verdict == Verdict::Proven);
    if (f.poly == pix_minus_2) {
      saw_square = true;
      CHECK(f.multiplicity == 2);
      CHECK(f.structural_square);
    }
    saw_u1 = saw_u1 || f.poly == Poly(6) * x * x - Poly(1);
    saw_u2 = saw_u2 || f.poly == Poly(120) * x.pow(4) - Poly(20) * x * x + Poly(1);
  }
  CHECK(saw_square);
  CHECK(saw_u1);
  CHECK(saw_u2);
  for (int s : {2, 3}) CHECK(decide_sign(pi_term(s, 1) - PiCoeff(2)).value == SignValue::Positive);
}

TEST_CASE("every side condition is Proven") {
  for (TheoremId id : {TheoremId::Thm1Left, TheoremId::Thm1Right, TheoremId::Thm2Left, TheoremId::Thm2Right}) {
    const CertificateReport& r = cached(id);
    CHECK(!r.side_conditions.empty());
    for (const auto& c : r.side_conditions) {
      INFO(to_string(id) << ": " << c.description);
      CHECK(c.verdict == Verdict::Proven);
    }
  }
}

TEST_CASE("numeric-only specs have no certificate") {
  CHECK_THROWS_AS(verify_inequality(build_spec(TheoremId::WilkerNumeric)), std::invalid_argument);
}

TEST_CASE("certificates are byte-identical across runs") {
  for (TheoremId id : {TheoremId::Thm1Left, TheoremId::Thm2Right}) {
    const std::string first = report_to_json(verify_inequality(build_spec(id))).dump();
    const std::string second = report_to_json(verify_inequality(build_spec(id))).dump();
    CHECK(first == second);
    CHECK(report_to_text(verify_inequality(build_spec(id))) == report_to_text(verify_inequality(build_spec(id))));
  }
}

TEST_CASE("certificate JSON keeps the documented field order") {
  const Json j = report_to_json(cached(TheoremId::Thm1Left));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  const std::vector<std::string> head = {"theorem_id", "shift", "lift_exponent", "scalar", "pi_normalization_power",
                                         "numerator_coeffs", "denominator_factors", "side_conditions", "verdict",
                                         "pi_bits_used"};
  REQUIRE(keys.size() >= head.size());
  CHECK(std::vector<std::string>(keys.begin(), keys.begin() + static_cast<long>(head.size())) == head);
  CHECK(j["scalar"] == "76204800");
  CHECK(j["numerator_coeffs"][0][0][1] == "1143460110295");
  CHECK(j["denominator_factors"][0].contains("certificate"));
}
