#include "wilker/ratfunc.hpp"

#include <algorithm>
#include <utility>

namespace wilker {

RatFunc::RatFunc(Poly numerator) : num_(std::move(numerator)) {}

RatFunc::RatFunc(Poly numerator, std::vector<Factor> factors)
    : num_(std::move(numerator)), den_(std::move(factors)) {
  normalize();
}

RatFunc RatFunc::over(Poly numerator, Poly denominator, std::string label) {
  return RatFunc(std::move(numerator), {Factor{std::move(denominator), 1, std::move(label)}});
}

void RatFunc::normalize() {
  std::vector<Factor> merged;
  for (auto& f : den_) {
    if (f.poly.is_zero()) throw ArithmeticError("zero denominator factor");
    if (f.multiplicity < 0) throw std::invalid_argument("negative factor multiplicity");
    if (f.multiplicity == 0) continue;
    if (auto unit = f.poly.leading().inverse()) {
      // Make the factor monic; poly = lead * monic.
      const PiCoeff lead = f.poly.leading();
      f.poly = f.poly.scaled(*unit);
      PiCoeff lead_power(1);
      for (int i = 0; i < f.multiplicity; ++i) lead_power = lead_power * lead;
      num_ = num_.scaled(*lead_power.inverse());
    }
    if (f.poly.degree() == 0 && f.poly.leading() == PiCoeff(1)) continue;
    auto same = std::find_if(merged.begin(), merged.end(), [&](const Factor& g) { return g.poly == f.poly; });
    if (same != merged.end()) {
      same->multiplicity += f.multiplicity;
    } else {
      merged.push_back(std::move(f));
    }
  }
  den_ = std::move(merged);
  if (num_.is_zero()) den_.clear();
}

Poly RatFunc::denominator() const {
  Poly d(1);
  for (const auto& f : den_) d = d * f.poly.pow(static_cast<unsigned>(f.multiplicity));
  return d;
}

RatFunc RatFunc::pow(unsigned exponent) const {
  RatFunc out;
  out.num_ = num_.pow(exponent);
  out.den_ = den_;
  for (auto& f : out.den_) f.multiplicity *= static_cast<int>(exponent);
  out.normalize();
  return out;
}

BigRational RatFunc::evaluate(const BigRational& t) const {
  BigRational value = num_.evaluate(t);
  for (const auto& f : den_) value /= wilker::pow(f.poly.evaluate(t), f.multiplicity);
  return value;
}

RationalInterval RatFunc::evaluate(const RationalInterval& t, const RationalInterval& pi) const {
  RationalInterval value = num_.evaluate(t, pi);
  for (const auto& f : den_) value = value / wilker::pow(f.poly.evaluate(t, pi), f.multiplicity);
  return value;
}

namespace {

// Common denominator of two factor lists: for every distinct factor the
// larger multiplicity. Returns the lcm and the cofactors for each side.
struct Combined {
  std::vector<Factor> lcm;
  Poly cofactor_a{1};
  Poly cofactor_b{1};
};

int multiplicity_in(const std::vector<Factor>& list, const Poly& poly) {
  auto it = std::find_if(list.begin(), list.end(), [&](const Factor& f) { return f.poly == poly; });
  return it == list.end() ? 0 : it->multiplicity;
}

Combined combine(const std::vector<Factor>& a, const std::vector<Factor>& b) {
  Combined out;
  auto visit = [&](const Factor& f) {
    if (multiplicity_in(out.lcm, f.poly) > 0) return;
    const int ma = multiplicity_in(a, f.poly);
    const int mb = multiplicity_in(b, f.poly);
    const int m = std::max(ma, mb);
    out.lcm.push_back(Factor{f.poly, m, f.label});
    out.cofactor_a = out.cofactor_a * f.poly.pow(static_cast<unsigned>(m - ma));
    out.cofactor_b = out.cofactor_b * f.poly.pow(static_cast<unsigned>(m - mb));
  };
  for (const auto& f : a) visit(f);
  for (const auto& f : b) visit(f);
  return out;
}

}  // namespace

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  Combined c = combine(a.den_, b.den_);
  return RatFunc(a.num_ * c.cofactor_a + b.num_ * c.cofactor_b, std::move(c.lcm));
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator-(const RatFunc& a) {
  RatFunc out = a;
  out.num_ = -out.num_;
  return out;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  std::vector<Factor> den = a.den_;
  den.insert(den.end(), b.den_.begin(), b.den_.end());
  return RatFunc(a.num_ * b.num_, std::move(den));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw ArithmeticError("division by the zero rational function");
  std::vector<Factor> den = a.den_;
  den.push_back(Factor{b.num_, 1, {}});
  return RatFunc(a.num_ * b.denominator(), std::move(den));
}

RatFunc rf_compose_linear(const RatFunc& f, const PiCoeff& a, const PiCoeff& b) {
  std::vector<Factor> den;
  for (const auto& g : f.factors()) {
    Poly composed = compose_linear(g.poly, a, b);
    if (composed.is_zero()) throw ArithmeticError("composed denominator vanishes identically");
    den.push_back(Factor{std::move(composed), g.multiplicity, g.label});
  }
  return RatFunc(compose_linear(f.numerator(), a, b), std::move(den));
}

RatFunc ReciprocalForm::as_ratfunc() const {
  std::vector<Factor> den = factors;
  Poly num = numerator;
  if (lift_exponent > 0) {
    den.push_back(Factor{Poly::x(), lift_exponent, "x"});
  } else if (lift_exponent < 0) {
    num = num * Poly::monomial(PiCoeff(1), -lift_exponent);
  }
  return RatFunc(std::move(num), std::move(den));
}

ReciprocalForm rf_reciprocal_sub(const RatFunc& f) {
  ReciprocalForm out;
  if (f.is_zero()) return out;
  out.numerator = reciprocal_lift(f.numerator(), f.numerator().degree());
  int den_degree = 0;
  for (const auto& g : f.factors()) {
    den_degree += g.multiplicity * g.poly.degree();
    Poly lifted = reciprocal_lift(g.poly, g.poly.degree());
    if (lifted.degree() == 0) {
      auto unit = lifted.leading().inverse();
      if (unit) {
        for (int i = 0; i < g.multiplicity; ++i) out.numerator = out.numerator.scaled(*unit);
        continue;
      }
    }
    out.factors.push_back(Factor{std::move(lifted), g.multiplicity, g.label});
  }
  out.lift_exponent = f.numerator().degree() - den_degree;
  return out;
}

}  // namespace wilker
