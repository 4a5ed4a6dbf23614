#include "wilker/polyring.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace wilker {

PiCoeff::PiCoeff(BigRational constant) {
  if (!constant.is_zero()) terms_.emplace(0, std::move(constant));
}

PiCoeff PiCoeff::monomial(const BigRational& coefficient, int pi_exponent) {
  PiCoeff c;
  c.add_term(pi_exponent, coefficient);
  return c;
}

BigRational PiCoeff::coefficient(int pi_exponent) const {
  auto it = terms_.find(pi_exponent);
  return it == terms_.end() ? BigRational(0) : it->second;
}

std::optional<BigRational> PiCoeff::rational_value() const {
  if (!is_rational()) return std::nullopt;
  return coefficient(0);
}

std::optional<PiCoeff> PiCoeff::inverse() const {
  if (!is_monomial()) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  return monomial(c.reciprocal(), -e);
}

PiCoeff PiCoeff::shifted(int k) const {
  PiCoeff out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

PiCoeff PiCoeff::scaled(const BigRational& factor) const {
  if (factor.is_zero()) return {};
  PiCoeff out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * factor);
  return out;
}

RationalInterval PiCoeff::enclose(const RationalInterval& pi) const {
  RationalInterval sum(BigRational(0));
  for (const auto& [e, c] : terms_) {
    sum = sum + RationalInterval(c) * pow(pi, e);
  }
  return sum;
}

void PiCoeff::add_term(int exponent, const BigRational& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, value);
  if (inserted) return;
  it->second += value;
  if (it->second.is_zero()) terms_.erase(it);
}

PiCoeff& PiCoeff::operator+=(const PiCoeff& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

PiCoeff& PiCoeff::operator-=(const PiCoeff& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

PiCoeff operator*(const PiCoeff& lhs, const PiCoeff& rhs) {
  PiCoeff out;
  for (const auto& [e1, c1] : lhs.terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

std::string superscript(int exponent) {
  static const char* const kDigits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out = exponent < 0 ? "⁻" : "";
  for (char ch : std::to_string(exponent < 0 ? -exponent : exponent)) out += kDigits[ch - '0'];
  return out;
}

namespace {

// Magnitude of one pi-term, e.g. "17280π⁶", "π", "(1/2)π³", "8/945".
std::string term_magnitude(const BigRational& magnitude, int pi_exponent) {
  if (pi_exponent == 0) return magnitude.to_string();
  std::string pi_part = pi_exponent == 1 ? "π" : "π" + superscript(pi_exponent);
  if (magnitude == BigRational(1)) return pi_part;
  if (magnitude.is_integer()) return magnitude.to_string() + pi_part;
  return "(" + magnitude.to_string() + ")" + pi_part;
}

}  // namespace

std::string PiCoeff::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    out += term_magnitude(c.abs(), e);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------

Poly::Poly(PiCoeff constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<PiCoeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(PiCoeff coefficient, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<PiCoeff> c(static_cast<size_t>(degree) + 1);
  c.back() = std::move(coefficient);
  return Poly(std::move(c));
}

Poly Poly::from_rationals(std::span<const BigRational> coeffs) {
  std::vector<PiCoeff> c;
  c.reserve(coeffs.size());
  for (const auto& r : coeffs) c.emplace_back(r);
  return Poly(std::move(c));
}

const PiCoeff& Poly::coeff(int k) const {
  static const PiCoeff kZero;
  if (k < 0 || k > degree()) return kZero;
  return coeffs_[static_cast<size_t>(k)];
}

const PiCoeff& Poly::leading() const { return coeff(degree()); }

bool Poly::is_pi_free() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const PiCoeff& c) { return c.is_rational(); });
}

int Poly::min_pi_exponent() const {
  std::optional<int> lowest;
  for (const auto& c : coeffs_) {
    if (c.is_zero()) continue;
    lowest = lowest ? std::min(*lowest, c.min_exponent()) : c.min_exponent();
  }
  return lowest.value_or(0);
}

Poly Poly::scaled(const PiCoeff& factor) const {
  std::vector<PiCoeff> c;
  c.reserve(coeffs_.size());
  for (const auto& a : coeffs_) c.push_back(a * factor);
  return Poly(std::move(c));
}

Poly Poly::shifted_pi(int k) const {
  std::vector<PiCoeff> c;
  c.reserve(coeffs_.size());
  for (const auto& a : coeffs_) c.push_back(a.shifted(k));
  return Poly(std::move(c));
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

PiCoeff Poly::evaluate(const PiCoeff& point) const {
  PiCoeff acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
  return acc;
}

BigRational Poly::evaluate(const BigRational& point) const {
  if (!is_pi_free()) throw std::invalid_argument("exact rational evaluation of a polynomial in pi");
  BigRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + it->coefficient(0);
  return acc;
}

RationalInterval Poly::evaluate(const RationalInterval& x, const RationalInterval& pi) const {
  RationalInterval acc(BigRational(0));
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->enclose(pi);
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<PiCoeff> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

// ---------------------------------------------------------------------------

Poly compose_linear(const Poly& p, const PiCoeff& a, const PiCoeff& b) {
  // Horner in the ring: q = (...(c_d (a+bx) + c_{d-1})(a+bx) + ...) + c_0.
  const Poly inner(std::vector<PiCoeff>{a, b});
  Poly q;
  for (int k = p.degree(); k >= 0; --k) q = q * inner + Poly(p.coeff(k));
  return q;
}

Poly reciprocal_lift(const Poly& p, int n) {
  if (n < p.degree()) {
    throw std::invalid_argument("reciprocal_lift: exponent " + std::to_string(n) +
                                " below degree " + std::to_string(p.degree()));
  }
  if (p.is_zero()) return {};
  std::vector<PiCoeff> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= p.degree(); ++k) c[static_cast<size_t>(n - k)] = p.coeff(k);
  return Poly(std::move(c));
}

RationalInterval poly_eval(const Poly& p, const RationalInterval& x, const RationalInterval& pi) {
  return p.evaluate(x, pi);
}

std::string render(const Poly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<bool, std::string>> terms;  // (negative, magnitude text)
  auto push = [&](int k) {
    const PiCoeff& c = p.coeff(k);
    if (c.is_zero()) return;
    const std::string xpart = k == 0 ? "" : (k == 1 ? "x" : "x" + superscript(k));
    if (c.is_monomial()) {
      const auto& [e, r] = *c.terms().begin();
      std::string mag = term_magnitude(r.abs(), e);
      if (k > 0 && e == 0 && r.abs() == BigRational(1)) mag.clear();
      if (k > 0 && e == 0 && !r.is_integer()) mag = "(" + mag + ")";
      terms.emplace_back(r.sign() < 0, mag + xpart);
    } else {
      terms.emplace_back(false, "(" + c.to_string() + ")" + xpart);
    }
  };
  for (int k = 1; k <= p.degree(); ++k) push(k);
  push(0);
  std::string out;
  for (size_t i = 0; i < terms.size(); ++i) {
    const auto& [neg, text] = terms[i];
    if (i == 0) {
      out += neg ? "-" + text : text;
    } else {
      out += (neg ? " - " : " + ") + text;
    }
  }
  return out;
}

}  // namespace wilker
