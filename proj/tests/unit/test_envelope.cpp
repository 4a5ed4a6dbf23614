#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "wilker/envelope.hpp"

using namespace wilker;
using wilker::testing::Rng;

TEST_CASE("truncation examples") {
  const Truncation s0 = truncation(TrigKind::Sin, 0);
  CHECK(s0.poly == Poly::x());
  CHECK(s0.side() == BoundSide::Upper);

  const Truncation c1 = truncation(TrigKind::Cos, 1);
  const std::vector<BigRational> v1 = {1, 0, BigRational(-1, 2)};
  CHECK(c1.poly == Poly::from_rationals(v1));
  CHECK(c1.side() == BoundSide::Lower);

  const Truncation s2 = truncation(TrigKind::Sin, 2);
  const std::vector<BigRational> u2 = {0, 1, 0, BigRational(-1, 6), 0, BigRational(1, 120)};
  CHECK(s2.poly == Poly::from_rationals(u2));
  CHECK(s2.side() == BoundSide::Upper);
  CHECK_THROWS(sin_truncation(-1));
}

TEST_CASE("rigorous sine and tangent at 1") {
  const RationalInterval s = rigorous_trig(TrigFunction::Sin, BigRational(1), power_of_two(-30));
  CHECK(BigRational::parse("0.8414709") <= s.lo());
  CHECK(s.hi() <= BigRational::parse("0.8414710"));
  CHECK(s.contains(BigRational::parse(wilker::oracle::kSin1)));
  CHECK(BigRational(4241, 5040) < s.lo());
  CHECK(s.hi() < BigRational(101, 120));

  const RationalInterval t = rigorous_trig(TrigFunction::Tan, BigRational(1), BigRational(1, 1000000));
  CHECK(t.width() <= BigRational(1, 1000000));
  // A width-1e-6 bracket may start up to 1e-6 below tan 1 = 1.5574077...
  CHECK(BigRational::parse("1.557406") <= t.lo());
  CHECK(t.hi() <= BigRational::parse("1.557409"));
  const RationalInterval tight = rigorous_trig(TrigFunction::Tan, BigRational(1), BigRational(1, 10000000));
  CHECK(BigRational::parse("1.557407") <= tight.lo());
  CHECK(tight.hi() <= BigRational::parse("1.557409"));
  CHECK(t.contains(BigRational::parse(wilker::oracle::kTan1)));

  const RationalInterval cot = rigorous_trig(TrigFunction::Cot, BigRational(1), power_of_two(-40));
  CHECK((cot * t).contains(BigRational(1)));
}

TEST_CASE("points outside the first quadrant are rejected") {
  CHECK_THROWS_AS(rigorous_sin_cos(BigRational(0), power_of_two(-10)), DomainError);
  CHECK_THROWS_AS(rigorous_sin_cos(BigRational(-1), power_of_two(-10)), DomainError);
  CHECK_THROWS_AS(rigorous_sin_cos(BigRational(8, 5), power_of_two(-10)), DomainError);
  CHECK_THROWS_AS(require_first_quadrant(BigRational::parse("1.5708")), DomainError);
  CHECK_NOTHROW(require_first_quadrant(BigRational::parse("1.5707963")));
}

TEST_CASE("sandwich property for orders up to 6") {
  Rng rng(301);
  const BigRational lo(1, 100), hi(155, 100);
  for (int i = 0; i < 100; ++i) {
    const BigRational x = rng.inside(lo, hi);
    const SinCos sc = rigorous_sin_cos(x, power_of_two(-400));
    for (int n = 0; n <= 6; ++n) {
      const BigRational us = sin_truncation(2 * n + 1).evaluate(x), Us = sin_truncation(2 * n).evaluate(x);
      const BigRational vc = cos_truncation(2 * n + 1).evaluate(x), Vc = cos_truncation(2 * n).evaluate(x);
      CHECK(us < sc.sin.lo());
      CHECK(sc.sin.hi() < Us);
      CHECK(vc < sc.cos.lo());
      CHECK(sc.cos.hi() < Vc);
    }
  }
}

TEST_CASE("doubling the truncation order shrinks the gap by at least 100") {
  Rng rng(302);
  for (int i = 0; i < 30; ++i) {
    const BigRational x = rng.inside(BigRational(1, 100), BigRational(3, 2));
    for (int n = 1; n <= 4; ++n) {
      for (TrigKind kind : {TrigKind::Sin, TrigKind::Cos}) {
        const BigRational g = truncation_gap(kind, x, n);
        CHECK(g.sign() > 0);
        CHECK(truncation_gap(kind, x, 2 * n) * 100 <= g);
      }
    }
  }
}

TEST_CASE("enclosures meet the requested width") {
  Rng rng(303);
  for (int i = 0; i < 30; ++i) {
    const BigRational x = rng.inside(BigRational(1, 100), BigRational(157, 100));
    const BigRational w = power_of_two(-static_cast<int>(rng.integer(10, 120)));
    for (TrigFunction f : {TrigFunction::Sin, TrigFunction::Cos, TrigFunction::Tan, TrigFunction::Cot}) {
      CHECK(rigorous_trig(f, x, w).width() <= w);
    }
  }
}
