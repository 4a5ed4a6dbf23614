#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "wilker/exactnum.hpp"

using namespace wilker;
using wilker::testing::Rng;

TEST_CASE("rationals are kept in lowest terms") {
  BigRational r(mpz_class(6), mpz_class(-4));
  CHECK(r.to_string() == "-3/2");
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(BigRational(8, 945) - BigRational(16, 14175) == BigRational(104, 14175));
  CHECK(BigRational(10).to_string() == "10");
}

TEST_CASE("parse accepts fractions, decimals, exponents and powers of two") {
  CHECK(BigRational::parse("1/3") == BigRational(1, 3));
  CHECK(BigRational::parse("-0.25") == BigRational(-1, 4));
  CHECK(BigRational::parse("1e-2") == BigRational(1, 100));
  CHECK(BigRational::parse("2.5E1") == BigRational(25));
  CHECK(BigRational::parse("2^-40") == power_of_two(-40));
  CHECK(BigRational::parse(" 7 ") == BigRational(7));
  CHECK_THROWS(BigRational::parse("abc"));
  CHECK_THROWS(BigRational::parse("1/0"));
  CHECK_THROWS(BigRational::parse(""));
}

TEST_CASE("division by zero raises ArithmeticError") {
  CHECK_THROWS_AS(BigRational(1) / BigRational(0), ArithmeticError);
  CHECK_THROWS_AS(BigRational(0).reciprocal(), ArithmeticError);
  CHECK_THROWS_AS(RationalInterval(BigRational(-1), BigRational(1)).reciprocal(), ArithmeticError);
}

TEST_CASE("decimal rendering rounds to the requested digits") {
  CHECK(BigRational(1, 3).to_decimal(5) == "0.33333");
  CHECK(BigRational(2, 3).to_decimal(3) == "0.667");
  CHECK(BigRational(-1, 8).to_decimal(2) == "-0.13");
  CHECK(BigRational(5).to_decimal(0) == "5");
}

TEST_CASE("dyadic rounding brackets the value") {
  const BigRational x(1, 3);
  CHECK(floor_dyadic(x, 10) <= x);
  CHECK(ceil_dyadic(x, 10) >= x);
  CHECK(ceil_dyadic(x, 10) - floor_dyadic(x, 10) == power_of_two(-10));
  CHECK(floor_dyadic(BigRational(3, 4), 2) == BigRational(3, 4));
}

TEST_CASE("interval arithmetic contains pointwise results") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    BigRational a = rng.rational(100, 17), b = rng.rational(100, 17);
    BigRational c = rng.rational(100, 17), d = rng.rational(100, 17);
    RationalInterval I(min(a, b), max(a, b)), J(min(c, d), max(c, d));
    const BigRational u = I.lo() + I.width() * BigRational(rng.integer(0, 1000), 1000);
    const BigRational v = J.lo() + J.width() * BigRational(rng.integer(0, 1000), 1000);
    CHECK((I + J).contains(u + v));
    CHECK((I - J).contains(u - v));
    CHECK((I * J).contains(u * v));
    CHECK(I.sqr().contains(u * u));
    CHECK(I.sqr().lo().sign() >= 0);
    if (!J.contains_zero()) CHECK((I / J).contains(u / v));
    CHECK(pow(I, 3).contains(u * u * u));
    CHECK(I.outward(8).contains(I));
  }
}

TEST_CASE("pi enclosure contains pi and meets the width bound") {
  const BigRational pi = wilker::testing::pi100();
  for (int bits : {2, 6, 8, 16, 32, 53, 64, 128, 256}) {
    const RationalInterval e = pi_enclosure(bits);
    CHECK(e.lo() < pi);
    CHECK(pi < e.hi());
    CHECK(e.width() <= power_of_two(-bits));
  }
  CHECK(pi_enclosure(6).width() <= BigRational(1, 64));
}

TEST_CASE("pi enclosures nest as precision grows") {
  RationalInterval previous = pi_enclosure(1);
  for (int bits = 2; bits <= 300; bits += 7) {
    const RationalInterval e = pi_enclosure(bits);
    CHECK(previous.contains(e));
    previous = e;
  }
}

TEST_CASE("pi enclosure rejects nonpositive precision") { CHECK_THROWS(pi_enclosure(0)); }

TEST_CASE("rational arithmetic examples") {
  CHECK(BigRational(1, 3) + BigRational(1, 6) == BigRational(1, 2));
  CHECK(BigRational(8, 45) * BigRational(45, 8) == BigRational(1));
  CHECK(BigRational(8, 45) - BigRational(8, 945) == BigRational(32, 189));
}

TEST_CASE("interval arithmetic examples") {
  using RI = RationalInterval;
  CHECK(RI(1, 2) + RI(3, 4) == RI(4, 6));
  CHECK(RI(-1, 1) * RI(2, 3) == RI(-3, 3));
  CHECK(RI(-2, 1).sqr() == RI(0, 4));
}

TEST_CASE("pi enclosure examples") {
  CHECK(pi_enclosure(1).contains(pi_enclosure(30)));
  CHECK_FALSE(pi_enclosure(30).contains(BigRational::parse("3.1416")));
  const RationalInterval six = pi_enclosure(6);
  CHECK(six.contains(wilker::testing::pi100()));
  CHECK(six.width() <= BigRational(1, 64));
}

TEST_CASE("random rational operations stay canonical and exact") {
  Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    const BigRational a = rng.rational(1000, 997), b = rng.rational(1000, 997);
    for (const BigRational& r : {a + b, a - b, a * b}) {
      mpz_class g;
      mpz_class n = r.numerator(), d = r.denominator();
      mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
      CHECK(g == 1);
      CHECK(d > 0);
    }
    CHECK((RationalInterval(a) + RationalInterval(b)).contains(a + b));
    CHECK((RationalInterval(a) * RationalInterval(b)).contains(a * b));
    if (!b.is_zero()) CHECK((RationalInterval(a) / RationalInterval(b)).contains(a / b));
  }
}

TEST_CASE("pi enclosure width bound for every precision up to 128") {
  const BigRational pi = wilker::testing::pi100();
  RationalInterval previous = pi_enclosure(1);
  for (int bits = 1; bits <= 128; ++bits) {
    const RationalInterval e = pi_enclosure(bits);
    CHECK(e.contains(pi));
    CHECK(e.width() <= power_of_two(-bits));
    CHECK(previous.contains(e));
    previous = e;
  }
}
