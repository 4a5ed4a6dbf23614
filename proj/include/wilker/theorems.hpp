// Programmatic constructions of the Wilker-type inequality instances.
//
// Every statement has the shape
//     2 + k(x) x^3 tan x  <  W(x)      (k bounds from below)   or
//     W(x)  <  2 + k(x) x^3 tan x      (k bounds from above),
// with W(x) = (sin x / x)^2 + tan x / x. The claimed difference is
//     Delta(x) = 2 + k(x) x^3 tan x - W(x),
// negative for lower bounds and positive for upper bounds. Symbolic
// instances carry a rational function that bounds Delta after replacing
// sin and cos by Taylor truncations.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wilker/envelope.hpp"
#include "wilker/ratfunc.hpp"

namespace wilker {

enum class TheoremId { Thm1Left, Thm1Right, Thm2Left, Thm2Right, WilkerNumeric, SumnerNumeric };

/// Canonical id ("thm1_left", ...). Parsing also accepts hyphens.
std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view text);
const std::vector<TheoremId>& all_theorem_ids();

enum class SignValue { Positive, Negative, Zero, Unknown };
std::string_view to_string(SignValue value);

/// offset + half_pi_multiple * (pi/2); enough for every endpoint used here.
struct Endpoint {
  BigRational offset;
  BigRational half_pi_multiple;

  static Endpoint rational(BigRational value) { return {std::move(value), BigRational(0)}; }
  static Endpoint half_pi_minus(BigRational value) { return {-value, BigRational(1)}; }

  RationalInterval enclose(const RationalInterval& pi) const;
  /// Exact rational point taken from the lower end of `pi`.
  BigRational resolve_below(const RationalInterval& pi) const;
  std::string to_string() const;
};

/// Open interval (lo, hi).
struct Domain {
  Endpoint lo;
  Endpoint hi;

  /// True when lo < x < hi holds for every pi in the enclosure.
  bool certainly_contains(const BigRational& x, const RationalInterval& pi) const;
  std::string to_string() const;
};

/// 2 + coefficient(x) x^3 tan x as a bound on W(x).
struct WilkerBound {
  BoundSide side;
  Poly coefficient;
  std::string description;
};

enum class Direction { MustBeNegative, MustBePositive };
/// Whether bound_difference sits above (Upper) or below (Lower) Delta.
enum class BoundRelation { Upper, Lower };

std::string_view to_string(Direction d);
std::string_view to_string(BoundRelation r);

struct SideCondition {
  struct PolyPositiveOn {
    Poly poly;
    BigRational shift;  // claim: poly(t) > 0 for t in (0, 1/shift)
  };
  struct PiSign {
    PiCoeff value;
    SignValue expected;
  };

  std::string description;
  std::variant<PolyPositiveOn, PiSign> kind;
};

struct InequalitySpec {
  TheoremId id;
  Domain domain;
  std::vector<WilkerBound> claims;

  /// Bound for Delta in the certificate variable t on (0, 1/shift).
  /// For the reflected instances t = pi/2 - x.
  std::optional<RatFunc> bound_difference;
  Direction direction = Direction::MustBeNegative;
  BoundRelation bound_relation = BoundRelation::Upper;
  BigRational shift;
  bool reflected = false;
  std::vector<SideCondition> side_conditions;
  bool numeric_only = false;
  /// Appendix letter of the certificate numerator ("A", "D", "E", "F").
  std::string numerator_name;
};

InequalitySpec build_spec(TheoremId id);

struct CorrectionTerms {
  Poly a, b, c, d;
};

/// a(x) = 8/945 x^2, b(x) = a(x) - 16/14175 x^4,
/// c(x) = (160/pi^5 - 16/pi^3)(pi/2 - x), d(x) = c(x) + (960/pi^6 - 96/pi^4)(pi/2 - x)^2.
CorrectionTerms correction_terms();

/// 160/pi^5 - 16/pi^3 and 960/pi^6 - 96/pi^4.
PiCoeff c_slope();
PiCoeff d_curvature();

}  // namespace wilker
