// Rigorous numeric checks of the Wilker-type inequalities on exact grids.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wilker/theorems.hpp"

namespace wilker {

/// Scannable statements. Thm1 and Thm2 check both halves of the theorem.
enum class ScanTarget { Thm1, Thm1Left, Thm1Right, Thm2, Thm2Left, Thm2Right, Wilker, Sumner };

std::string_view to_string(ScanTarget t);
std::optional<ScanTarget> parse_scan_target(std::string_view text);
const std::vector<ScanTarget>& all_scan_targets();

/// Domain the statement is proven on (intersection for Thm1 and Thm2).
Domain scan_domain(ScanTarget t);

enum class Holds { Yes, No, Undecided };
std::string_view to_string(Holds h);

inline BigRational default_trig_width() { return power_of_two(-40); }
inline BigRational retry_trig_width() { return power_of_two(-80); }

struct ScanConfig {
  ScanTarget target = ScanTarget::Wilker;
  Endpoint from;
  Endpoint to;
  int steps = 50;
  BigRational trig_width = default_trig_width();
};

/// Residual kind: lambda = ratio - 8/45, mu = ratio - 16/pi^4.
enum class ResidualKind { Lambda, Mu };
std::string_view to_string(ResidualKind k);

struct ScanRow {
  BigRational x;
  std::optional<RationalInterval> lhs_bound;  // lower bounds on W
  RationalInterval value;                     // W(x)
  std::optional<RationalInterval> rhs_bound;  // upper bounds on W
  RationalInterval residual;
  ResidualKind residual_kind = ResidualKind::Lambda;
  Holds holds = Holds::Undecided;
};

/// Throws DomainError when the grid leaves the proven domain, and
/// std::invalid_argument for steps < 2 or from >= to.
std::vector<ScanRow> scan(const ScanConfig& config);

/// Evaluates one point; retries at retry_trig_width() when undecided.
ScanRow scan_point(ScanTarget target, const BigRational& x, const BigRational& trig_width);

/// Enclosure of ((sin x/x)^2 + tan x/x - 2) / (x^3 tan x) of width <= width.
RationalInterval wilker_ratio(const BigRational& x, const BigRational& width);

/// W(x) = (sin x/x)^2 + tan x/x.
RationalInterval wilker_value(const BigRational& x, const BigRational& width);

/// Rows as CSV: x, lhs_lo, lhs_hi, val_lo, val_hi, rhs_lo, rhs_hi,
/// residual_lo, residual_hi, holds, x_decimal. Missing bounds are empty.
std::string scan_to_csv(const std::vector<ScanRow>& rows);

enum class LimitStatus { Certified, Violated, Undecided };
std::string_view to_string(LimitStatus s);

struct LimitCheck {
  BigRational x;
  RationalInterval ratio;
  RationalInterval deviation;  // ratio - limit
  BigRational tolerance;
  LimitStatus status = LimitStatus::Undecided;
  /// ratio certified inside (16/pi^4, 8/45).
  LimitStatus bracketed = LimitStatus::Undecided;
};

struct LimitsReport {
  BigRational eps;
  LimitCheck near_zero;     // x = eps against 8/45
  LimitCheck near_half_pi;  // x = pi/2 - eps against 16/pi^4
};

inline BigRational default_zero_tolerance() { return BigRational(1, 10000); }
inline BigRational default_half_pi_tolerance() { return BigRational(1, 1000); }

/// Requires 0 < eps < pi/4.
LimitsReport check_limits(const BigRational& eps, const BigRational& zero_tolerance = default_zero_tolerance(),
                          const BigRational& half_pi_tolerance = default_half_pi_tolerance());

enum class PairOrder { Decreasing, Increasing, Undecided };
std::string_view to_string(PairOrder o);

struct MonotonicityPair {
  BigRational x0, x1;
  RationalInterval r0, r1;
  PairOrder order = PairOrder::Undecided;
};

struct MonotonicityReport {
  std::vector<MonotonicityPair> pairs;
  int undecided = 0;
  bool strictly_decreasing = true;  // every pair certified decreasing
};

/// Grid must be nondecreasing inside (0, pi/2); equal points are undecided.
MonotonicityReport monotonicity_spotcheck(const std::vector<BigRational>& grid,
                                          const BigRational& width = default_trig_width());

/// from + i (to - from) / (steps - 1), endpoints included.
std::vector<BigRational> uniform_grid(const BigRational& from, const BigRational& to, int steps);

}  // namespace wilker
