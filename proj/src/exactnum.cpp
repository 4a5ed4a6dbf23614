#include "wilker/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace wilker {

BigRational::BigRational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw ArithmeticError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

mpz_class parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  mpz_class v(std::string(s), 10);
  return negative ? mpz_class(-v) : v;
}

}  // namespace

BigRational BigRational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  if (auto caret = s.find('^'); caret != std::string_view::npos) {
    mpz_class base = parse_integer(s.substr(0, caret));
    mpz_class exp = parse_integer(s.substr(caret + 1));
    if (!exp.fits_sint_p()) throw std::invalid_argument("exponent out of range");
    return pow(BigRational(base, 1), static_cast<int>(exp.get_si()));
  }
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    return BigRational(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));
  }

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mpz_class ev = parse_integer(s.substr(e + 1));
    if (!ev.fits_slong_p()) throw std::invalid_argument("exponent out of range");
    exponent = ev.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw std::invalid_argument("bad decimal literal");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("bad decimal literal: '" + std::string(text) + "'");
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) throw std::invalid_argument("bad rational literal: '" + std::string(text) + "'");
    digits = std::string(s);
  }
  if (digits.empty()) digits = "0";
  BigRational value(mpz_class(digits, 10), 1);
  value *= pow(BigRational(10), static_cast<int>(exponent));
  return negative ? -value : value;
}

BigRational BigRational::abs() const { return sign() < 0 ? -*this : *this; }

BigRational BigRational::reciprocal() const {
  if (is_zero()) throw ArithmeticError("reciprocal of zero");
  return BigRational(mpq_class(1) / value_);
}

std::string BigRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string BigRational::to_decimal(int digits) const {
  digits = std::max(digits, 0);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class num = mpz_class(::abs(value_.get_num())) * scale * 2 + value_.get_den();
  mpz_class den = value_.get_den() * 2;
  mpz_class rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  std::string s = rounded.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<size_t>(digits), ".");
  if (sign() < 0 && rounded != 0) s.insert(0, "-");
  return s;
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}
BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigRational operator-(const BigRational& value) { return BigRational(mpq_class(-value.value_)); }

std::strong_ordering operator<=>(const BigRational& lhs, const BigRational& rhs) {
  const int c = cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigRational pow(const BigRational& base, int exponent) {
  if (exponent < 0) return pow(base.reciprocal(), -exponent);
  mpz_class num, den;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
  return BigRational(num, den);
}

BigRational min(const BigRational& a, const BigRational& b) { return b < a ? b : a; }
BigRational max(const BigRational& a, const BigRational& b) { return a < b ? b : a; }

BigRational power_of_two(int exponent) {
  mpz_class p = 1;
  const auto e = static_cast<mp_bitcnt_t>(exponent < 0 ? -exponent : exponent);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
  return exponent < 0 ? BigRational(1, p) : BigRational(p, 1);
}

BigRational floor_dyadic(const BigRational& value, int bits) {
  const BigRational scaled = value * power_of_two(bits);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.numerator().get_mpz_t(), scaled.denominator().get_mpz_t());
  return BigRational(q, 1) * power_of_two(-bits);
}

BigRational ceil_dyadic(const BigRational& value, int bits) {
  const BigRational scaled = value * power_of_two(bits);
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), scaled.numerator().get_mpz_t(), scaled.denominator().get_mpz_t());
  return BigRational(q, 1) * power_of_two(-bits);
}

// ---------------------------------------------------------------------------

RationalInterval::RationalInterval(BigRational point) : lo_(point), hi_(std::move(point)) {}

RationalInterval::RationalInterval(BigRational lo, BigRational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("interval with lo > hi");
}

RationalInterval RationalInterval::outward(int bits) const {
  return {floor_dyadic(lo_, bits), ceil_dyadic(hi_, bits)};
}

RationalInterval RationalInterval::sqr() const {
  BigRational a = lo_ * lo_;
  BigRational b = hi_ * hi_;
  if (contains_zero()) return {BigRational(0), max(a, b)};
  return {min(a, b), max(a, b)};
}

RationalInterval RationalInterval::reciprocal() const {
  if (contains_zero()) throw ArithmeticError("division by an interval containing zero");
  return {hi_.reciprocal(), lo_.reciprocal()};
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

RationalInterval operator-(const RationalInterval& a) { return {-a.hi_, -a.lo_}; }

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  if (a.is_point() && b.is_point()) return RationalInterval(a.lo_ * b.lo_);
  BigRational p1 = a.lo_ * b.lo_;
  BigRational p2 = a.lo_ * b.hi_;
  BigRational p3 = a.hi_ * b.lo_;
  BigRational p4 = a.hi_ * b.hi_;
  return {min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4))};
}

RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
  return a * b.reciprocal();
}

std::string RationalInterval::to_string() const {
  return "[" + lo_.to_string() + ", " + hi_.to_string() + "]";
}

RationalInterval pow(const RationalInterval& base, int exponent) {
  if (exponent < 0) return pow(base.reciprocal(), -exponent);
  if (exponent == 0) return RationalInterval(BigRational(1));
  if (exponent % 2 == 0) {
    RationalInterval half = pow(base, exponent / 2);
    return half.sqr();
  }
  // Odd powers are monotone.
  return {pow(base.lo(), exponent), pow(base.hi(), exponent)};
}

// ---------------------------------------------------------------------------

namespace {

// Bracket of atan(1/k) between two consecutive partial sums of its
// alternating series, stopping at the first term not exceeding `tolerance`.
// The stopping index is monotone in the tolerance, so brackets nest.
RationalInterval atan_inverse_bracket(long k, const BigRational& tolerance) {
  const BigRational inv_k_sq(1, mpz_class(k) * k);
  BigRational power(1, k);  // (1/k)^(2i+1)
  BigRational term = power;
  BigRational previous = term;
  BigRational sum = term;
  for (long i = 1;; ++i) {
    power *= inv_k_sq;
    term = power / BigRational(2 * i + 1);
    previous = sum;
    if (i % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
    if (term <= tolerance) break;
  }
  return {min(previous, sum), max(previous, sum)};
}

}  // namespace

RationalInterval pi_enclosure(int precision_bits) {
  if (precision_bits < 1) throw std::invalid_argument("pi_enclosure needs precision_bits >= 1");
  const BigRational budget = power_of_two(-(precision_bits + 1));
  RationalInterval a5 = atan_inverse_bracket(5, budget / 32);
  RationalInterval a239 = atan_inverse_bracket(239, budget / 8);
  RationalInterval raw = RationalInterval(BigRational(16)) * a5 - RationalInterval(BigRational(4)) * a239;
  return raw.outward(precision_bits + 2);
}

}  // namespace wilker
