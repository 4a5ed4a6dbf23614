#include "wilker/theorems.hpp"

#include <algorithm>
#include <stdexcept>

namespace wilker {

namespace {

struct IdName {
  TheoremId id;
  std::string_view name;
};

constexpr IdName kIdNames[] = {
    {TheoremId::Thm1Left, "thm1_left"},         {TheoremId::Thm1Right, "thm1_right"},
    {TheoremId::Thm2Left, "thm2_left"},         {TheoremId::Thm2Right, "thm2_right"},
    {TheoremId::WilkerNumeric, "wilker_numeric"}, {TheoremId::SumnerNumeric, "sumner_numeric"},
};

Poly x_poly() { return Poly::x(); }

Poly u(int p) { return sin_truncation(p); }
Poly v(int q) { return cos_truncation(q); }

Factor factor(Poly p, std::string label) { return Factor{std::move(p), 1, std::move(label)}; }

PiCoeff rational(long num, long den = 1) { return PiCoeff(BigRational(num, den)); }

// pi/2 - t
Poly half_pi_minus_t() {
  return Poly(std::vector<PiCoeff>{PiCoeff::monomial(BigRational(1, 2), 1), PiCoeff(-1)});
}

SideCondition positive_on(Poly p, std::string name, long shift) {
  std::string domain = shift == 1 ? "(0,1)" : "(0,1/" + std::to_string(shift) + ")";
  return {name + " > 0 on " + domain, SideCondition::PolyPositiveOn{std::move(p), BigRational(shift)}};
}

SideCondition pi_positive(PiCoeff value, std::string description) {
  return {std::move(description), SideCondition::PiSign{std::move(value), SignValue::Positive}};
}

PiCoeff pi_times_minus_two(long s) { return PiCoeff::monomial(BigRational(s), 1) - PiCoeff(2); }

// The envelope substitution shared by both sides of the first statement:
//   2 + k x^3 s_tan/c_tan - ((s_sq/x)^2 + (1/x) s_sq/c_sq)
// where tan x ~ s_tan/c_tan in the x^3 tan x term and sin, tan ~ s_sq, s_sq/c_sq
// in W.
RatFunc first_form(const Poly& k, const Poly& s_tan, const Poly& c_tan, std::string c_tan_label,
                   const Poly& s_sq, const Poly& c_sq, std::string c_sq_label) {
  const Poly x = x_poly();
  RatFunc tan_term(k * x.pow(3) * s_tan, {factor(c_tan, std::move(c_tan_label))});
  RatFunc sin_sq = RatFunc(s_sq, {factor(x, "x")}).pow(2);
  RatFunc tan_over_x(s_sq, {factor(x, "x"), factor(c_sq, std::move(c_sq_label))});
  return RatFunc(2) + tan_term - (sin_sq + tan_over_x);
}

// After x -> pi/2 - t the roles swap: tan becomes cot t = cos t / sin t.
//   2 + k (pi/2-t)^3 c_cot/s_cot - ((c_sq/(pi/2-t))^2 + c_sq/((pi/2-t) s_sq))
RatFunc second_form(const Poly& k, const Poly& c_cot, const Poly& s_cot, std::string s_cot_label,
                    const Poly& c_sq, const Poly& s_sq, std::string s_sq_label) {
  const Poly y = half_pi_minus_t();
  RatFunc cot_term(k * y.pow(3) * c_cot, {factor(s_cot, std::move(s_cot_label))});
  RatFunc cos_sq = RatFunc(c_sq, {factor(y, "pi/2-x")}).pow(2);
  RatFunc cot_over_y(c_sq, {factor(y, "pi/2-x"), factor(s_sq, std::move(s_sq_label))});
  return RatFunc(2) + cot_term - (cos_sq + cot_over_y);
}

Domain unit_interval() { return {Endpoint::rational(0), Endpoint::rational(1)}; }

Domain near_half_pi(BigRational width) {
  return {Endpoint::half_pi_minus(std::move(width)), Endpoint::half_pi_minus(0)};
}

}  // namespace

std::string_view to_string(TheoremId id) {
  for (const auto& [i, name] : kIdNames)
    if (i == id) return name;
  throw std::logic_error("unknown theorem id");
}

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), '-', '_');
  for (const auto& [i, name] : kIdNames)
    if (s == name) return i;
  return std::nullopt;
}

const std::vector<TheoremId>& all_theorem_ids() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> out;
    for (const auto& entry : kIdNames) out.push_back(entry.id);
    return out;
  }();
  return ids;
}

std::string_view to_string(SignValue value) {
  switch (value) {
    case SignValue::Positive: return "positive";
    case SignValue::Negative: return "negative";
    case SignValue::Zero: return "zero";
    case SignValue::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(Direction d) {
  return d == Direction::MustBeNegative ? "must_be_negative" : "must_be_positive";
}

std::string_view to_string(BoundRelation r) { return r == BoundRelation::Upper ? "upper" : "lower"; }

RationalInterval Endpoint::enclose(const RationalInterval& pi) const {
  return RationalInterval(offset) + RationalInterval(half_pi_multiple / 2) * pi;
}

BigRational Endpoint::resolve_below(const RationalInterval& pi) const {
  return offset + half_pi_multiple * pi.lo() / 2;
}

std::string Endpoint::to_string() const {
  if (half_pi_multiple.is_zero()) return offset.to_string();
  std::string head = half_pi_multiple == BigRational(1) ? "pi/2" : half_pi_multiple.to_string() + "*pi/2";
  if (offset.is_zero()) return head;
  return head + (offset.sign() < 0 ? " - " : " + ") + offset.abs().to_string();
}

bool Domain::certainly_contains(const BigRational& x, const RationalInterval& pi) const {
  return lo.enclose(pi).hi() < x && x < hi.enclose(pi).lo();
}

std::string Domain::to_string() const { return "(" + lo.to_string() + ", " + hi.to_string() + ")"; }

PiCoeff c_slope() {
  return PiCoeff::monomial(BigRational(160), -5) - PiCoeff::monomial(BigRational(16), -3);
}

PiCoeff d_curvature() {
  return PiCoeff::monomial(BigRational(960), -6) - PiCoeff::monomial(BigRational(96), -4);
}

CorrectionTerms correction_terms() {
  const Poly x = x_poly();
  Poly a = Poly(rational(8, 945)) * x.pow(2);
  Poly b = a - Poly(rational(16, 14175)) * x.pow(4);
  // pi/2 - x in the original variable.
  const Poly gap = half_pi_minus_t();
  Poly c = gap.scaled(c_slope());
  Poly d = c + gap.pow(2).scaled(d_curvature());
  return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

InequalitySpec build_spec(TheoremId id) {
  const CorrectionTerms terms = correction_terms();
  const Poly x = x_poly();
  const Poly eight_45(rational(8, 45));
  const Poly sixteen_pi4(PiCoeff::monomial(BigRational(16), -4));

  InequalitySpec spec;
  spec.id = id;
  switch (id) {
    case TheoremId::Thm1Left: {
      const Poly k = eight_45 - terms.a;
      spec.domain = unit_interval();
      spec.claims = {{BoundSide::Lower, k, "2 + (8/45 - a(x)) x^3 tan x < W(x)"}};
      spec.bound_difference = first_form(k, u(4), v(3), "v(x,3)", u(3), v(4), "v(x,4)");
      spec.direction = Direction::MustBeNegative;
      spec.bound_relation = BoundRelation::Upper;
      spec.shift = BigRational(1);
      spec.side_conditions = {
          positive_on(v(3), "v(x,3)", 1), positive_on(v(4), "v(x,4)", 1),
          positive_on(u(3), "u(x,3)", 1), positive_on(u(4), "u(x,4)", 1),
          positive_on(k, "8/45 - a(x)", 1), pi_positive(pi_times_minus_two(1), "pi - 2 > 0"),
      };
      spec.numerator_name = "A";
      break;
    }
    case TheoremId::Thm1Right: {
      // The valid direction: 2 + (8/45 - b) x^3 tan x stays below W on (0,1).
      // The certified bound n(x) lies below Delta, so its negativity does not
      // by itself imply the claim; the report records this.
      const Poly k = eight_45 - terms.b;
      spec.domain = unit_interval();
      spec.claims = {{BoundSide::Lower, k, "2 + (8/45 - b(x)) x^3 tan x < W(x)"}};
      spec.bound_difference = first_form(k, u(5), v(4), "v(x,4)", u(6), v(3), "v(x,3)");
      spec.direction = Direction::MustBeNegative;
      spec.bound_relation = BoundRelation::Lower;
      spec.shift = BigRational(1);
      spec.side_conditions = {
          positive_on(v(3), "v(x,3)", 1), positive_on(v(4), "v(x,4)", 1),
          positive_on(u(5), "u(x,5)", 1), positive_on(u(6), "u(x,6)", 1),
          positive_on(k, "8/45 - b(x)", 1), pi_positive(pi_times_minus_two(1), "pi - 2 > 0"),
      };
      spec.numerator_name = "D";
      break;
    }
    case TheoremId::Thm2Left: {
      // In t = pi/2 - x the correction c becomes c_slope * t.
      const Poly k_t(std::vector<PiCoeff>{PiCoeff::monomial(BigRational(16), -4), c_slope()});
      spec.domain = near_half_pi(BigRational(1, 3));
      spec.claims = {{BoundSide::Lower, sixteen_pi4 + terms.c, "2 + (16/pi^4 + c(x)) x^3 tan x < W(x)"}};
      spec.bound_difference = second_form(k_t, v(2), u(1), "u(x,1)", v(1), u(2), "u(x,2)");
      spec.direction = Direction::MustBeNegative;
      spec.bound_relation = BoundRelation::Upper;
      spec.shift = BigRational(3);
      spec.reflected = true;
      spec.side_conditions = {
          positive_on(u(1), "u(x,1)", 3), positive_on(u(2), "u(x,2)", 3),
          positive_on(v(1), "v(x,1)", 3), positive_on(v(2), "v(x,2)", 3),
          pi_positive(c_slope(), "160/pi^5 - 16/pi^3 > 0"),
          pi_positive(pi_times_minus_two(3), "3 pi - 2 > 0"),
      };
      spec.numerator_name = "E";
      break;
    }
    case TheoremId::Thm2Right: {
      const Poly k_t(std::vector<PiCoeff>{PiCoeff::monomial(BigRational(16), -4), c_slope(), d_curvature()});
      spec.domain = near_half_pi(BigRational(1, 2));
      spec.claims = {{BoundSide::Upper, sixteen_pi4 + terms.d, "W(x) < 2 + (16/pi^4 + d(x)) x^3 tan x"}};
      spec.bound_difference = second_form(k_t, v(1), u(2), "u(x,2)", v(2), u(1), "u(x,1)");
      spec.direction = Direction::MustBePositive;
      spec.bound_relation = BoundRelation::Lower;
      spec.shift = BigRational(2);
      spec.reflected = true;
      spec.side_conditions = {
          positive_on(u(1), "u(x,1)", 2), positive_on(u(2), "u(x,2)", 2),
          positive_on(v(1), "v(x,1)", 2), positive_on(v(2), "v(x,2)", 2),
          pi_positive(c_slope(), "160/pi^5 - 16/pi^3 > 0"),
          pi_positive(d_curvature(), "960/pi^6 - 96/pi^4 > 0"),
          pi_positive(pi_times_minus_two(2), "2 pi - 2 > 0"),
      };
      spec.numerator_name = "F";
      break;
    }
    case TheoremId::WilkerNumeric:
      spec.domain = {Endpoint::rational(0), Endpoint::half_pi_minus(0)};
      spec.claims = {{BoundSide::Lower, Poly(), "2 < W(x)"}};
      spec.numeric_only = true;
      break;
    case TheoremId::SumnerNumeric:
      spec.domain = {Endpoint::rational(0), Endpoint::half_pi_minus(0)};
      spec.claims = {{BoundSide::Lower, sixteen_pi4, "2 + (16/pi^4) x^3 tan x < W(x)"},
                     {BoundSide::Upper, eight_45, "W(x) < 2 + (8/45) x^3 tan x"}};
      spec.numeric_only = true;
      break;
  }
  return spec;
}

}  // namespace wilker
