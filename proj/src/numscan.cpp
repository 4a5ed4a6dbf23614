#include "wilker/numscan.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wilker {

namespace {

constexpr int kTightenRounds = 32;
constexpr int kCsvBits = 128;

struct TrigPoint {
  RationalInterval value;  // W(x)
  RationalInterval x3tan;  // x^3 tan x
};

TrigPoint eval_trig(const BigRational& x, const BigRational& inner) {
  const SinCos sc = rigorous_sin_cos(x, inner);
  if (!sc.cos.strictly_positive()) throw DomainError("cosine enclosure touches 0 at x = " + x.to_string());
  const RationalInterval tan = sc.sin / sc.cos;
  const RationalInterval xi(x);
  const RationalInterval s_over_x = sc.sin / xi;
  return {s_over_x.sqr() + tan / xi, pow(xi, 3) * tan};
}

int bits_for(const BigRational& width) {
  int b = 0;
  while (power_of_two(-b) > width) ++b;
  return b;
}

RationalInterval pi_for(const BigRational& width) { return pi_enclosure(std::max(64, bits_for(width) + 32)); }

RationalInterval sixteen_over_pi4(const RationalInterval& pi) { return RationalInterval(BigRational(16)) / pow(pi, 4); }

std::vector<InequalitySpec> specs_for(ScanTarget t) {
  switch (t) {
    case ScanTarget::Thm1: return {build_spec(TheoremId::Thm1Left), build_spec(TheoremId::Thm1Right)};
    case ScanTarget::Thm1Left: return {build_spec(TheoremId::Thm1Left)};
    case ScanTarget::Thm1Right: return {build_spec(TheoremId::Thm1Right)};
    case ScanTarget::Thm2: return {build_spec(TheoremId::Thm2Left), build_spec(TheoremId::Thm2Right)};
    case ScanTarget::Thm2Left: return {build_spec(TheoremId::Thm2Left)};
    case ScanTarget::Thm2Right: return {build_spec(TheoremId::Thm2Right)};
    case ScanTarget::Wilker: return {build_spec(TheoremId::WilkerNumeric)};
    case ScanTarget::Sumner: return {build_spec(TheoremId::SumnerNumeric)};
  }
  return {};
}

ResidualKind residual_kind_for(ScanTarget t, const BigRational& x) {
  switch (t) {
    case ScanTarget::Thm1:
    case ScanTarget::Thm1Left:
    case ScanTarget::Thm1Right: return ResidualKind::Lambda;
    case ScanTarget::Thm2:
    case ScanTarget::Thm2Left:
    case ScanTarget::Thm2Right: return ResidualKind::Mu;
    default: return x < BigRational(785, 1000) ? ResidualKind::Lambda : ResidualKind::Mu;
  }
}

ScanRow evaluate_row(ScanTarget target, const std::vector<WilkerBound>& claims, const BigRational& x,
                     const BigRational& width) {
  const RationalInterval pi = pi_for(width);
  ScanRow row;
  row.x = x;
  row.residual_kind = residual_kind_for(target, x);
  const RationalInterval limit =
      row.residual_kind == ResidualKind::Lambda ? RationalInterval(BigRational(8, 45)) : sixteen_over_pi4(pi);
  const RationalInterval k_x(x);

  std::vector<RationalInterval> lower, upper;
  BigRational inner = width;
  for (int round = 0;; ++round) {
    const TrigPoint t = eval_trig(x, inner);
    lower.clear();
    upper.clear();
    bool tight = t.value.width() <= width;
    for (const auto& claim : claims) {
      RationalInterval bound = RationalInterval(BigRational(2)) + claim.coefficient.evaluate(k_x, pi) * t.x3tan;
      tight = tight && bound.width() <= width;
      (claim.side == BoundSide::Lower ? lower : upper).push_back(std::move(bound));
    }
    row.value = t.value;
    row.residual = (t.value - RationalInterval(BigRational(2))) / t.x3tan - limit;
    tight = tight && row.residual.width() <= width;
    if (tight || round == kTightenRounds) break;
    inner /= power_of_two(8);
  }

  bool all_yes = true;
  bool any_no = false;
  for (const auto& b : lower) {
    all_yes = all_yes && certainly_less(b, row.value);
    any_no = any_no || b.lo() >= row.value.hi();
  }
  for (const auto& b : upper) {
    all_yes = all_yes && certainly_less(row.value, b);
    any_no = any_no || b.hi() <= row.value.lo();
  }
  row.holds = any_no ? Holds::No : all_yes ? Holds::Yes : Holds::Undecided;

  // Report the most demanding bound on each side.
  auto by_hi = [](const RationalInterval& a, const RationalInterval& b) { return a.hi() < b.hi(); };
  auto by_lo = [](const RationalInterval& a, const RationalInterval& b) { return a.lo() < b.lo(); };
  if (!lower.empty()) row.lhs_bound = *std::max_element(lower.begin(), lower.end(), by_hi);
  if (!upper.empty()) row.rhs_bound = *std::min_element(upper.begin(), upper.end(), by_lo);
  return row;
}

std::string interval_cells(const std::optional<RationalInterval>& i) {
  if (!i) return ",";
  const RationalInterval r = i->outward(kCsvBits);
  return r.lo().to_string() + "," + r.hi().to_string();
}

}  // namespace

std::string_view to_string(ScanTarget t) {
  switch (t) {
    case ScanTarget::Thm1: return "thm1";
    case ScanTarget::Thm1Left: return "thm1_left";
    case ScanTarget::Thm1Right: return "thm1_right";
    case ScanTarget::Thm2: return "thm2";
    case ScanTarget::Thm2Left: return "thm2_left";
    case ScanTarget::Thm2Right: return "thm2_right";
    case ScanTarget::Wilker: return "wilker";
    case ScanTarget::Sumner: return "sumner";
  }
  return "wilker";
}

const std::vector<ScanTarget>& all_scan_targets() {
  static const std::vector<ScanTarget> targets = {ScanTarget::Thm1,      ScanTarget::Thm1Left, ScanTarget::Thm1Right,
                                                  ScanTarget::Thm2,      ScanTarget::Thm2Left, ScanTarget::Thm2Right,
                                                  ScanTarget::Wilker,    ScanTarget::Sumner};
  return targets;
}

std::optional<ScanTarget> parse_scan_target(std::string_view text) {
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), '-', '_');
  if (normalized == "wilker_numeric") return ScanTarget::Wilker;
  if (normalized == "sumner_numeric") return ScanTarget::Sumner;
  for (ScanTarget t : all_scan_targets())
    if (to_string(t) == normalized) return t;
  return std::nullopt;
}

Domain scan_domain(ScanTarget t) {
  if (t == ScanTarget::Thm2) return build_spec(TheoremId::Thm2Left).domain;  // the narrower of the two
  return specs_for(t).front().domain;
}

std::string_view to_string(Holds h) {
  switch (h) {
    case Holds::Yes: return "yes";
    case Holds::No: return "no";
    case Holds::Undecided: return "undecided";
  }
  return "undecided";
}

std::string_view to_string(ResidualKind k) { return k == ResidualKind::Lambda ? "lambda" : "mu"; }

RationalInterval wilker_value(const BigRational& x, const BigRational& width) {
  BigRational inner = width;
  for (int round = 0; round <= kTightenRounds; ++round) {
    const TrigPoint t = eval_trig(x, inner);
    if (t.value.width() <= width) return t.value;
    inner /= power_of_two(8);
  }
  throw DomainError("W(x) enclosure did not reach the requested width at x = " + x.to_string());
}

RationalInterval wilker_ratio(const BigRational& x, const BigRational& width) {
  if (width.sign() <= 0) throw std::invalid_argument("width must be positive");
  BigRational inner = width;
  for (int round = 0; round <= kTightenRounds; ++round) {
    const TrigPoint t = eval_trig(x, inner);
    RationalInterval ratio = (t.value - RationalInterval(BigRational(2))) / t.x3tan;
    if (ratio.width() <= width) return ratio;
    inner /= power_of_two(8);
  }
  throw DomainError("ratio enclosure did not reach the requested width at x = " + x.to_string());
}

ScanRow scan_point(ScanTarget target, const BigRational& x, const BigRational& trig_width) {
  std::vector<WilkerBound> claims;
  for (const auto& spec : specs_for(target))
    for (const auto& c : spec.claims) claims.push_back(c);
  ScanRow row = evaluate_row(target, claims, x, trig_width);
  const BigRational retry = retry_trig_width();
  if (row.holds == Holds::Undecided && trig_width > retry) row = evaluate_row(target, claims, x, retry);
  return row;
}

std::vector<BigRational> uniform_grid(const BigRational& from, const BigRational& to, int steps) {
  if (steps < 2) throw std::invalid_argument("a grid needs at least 2 steps");
  std::vector<BigRational> grid;
  grid.reserve(static_cast<size_t>(steps));
  const BigRational step = (to - from) / BigRational(steps - 1);
  for (int i = 0; i < steps; ++i) grid.push_back(i == steps - 1 ? to : from + step * BigRational(i));
  return grid;
}

std::vector<ScanRow> scan(const ScanConfig& config) {
  if (config.steps < 2) throw std::invalid_argument("steps must be at least 2");
  if (config.trig_width.sign() <= 0) throw std::invalid_argument("width must be positive");
  const RationalInterval pi = pi_enclosure(128);
  const BigRational from = config.from.resolve_below(pi);
  const BigRational to = config.to.resolve_below(pi);
  if (!(from < to)) throw std::invalid_argument("grid start must be below grid end");
  const Domain domain = scan_domain(config.target);
  if (!domain.certainly_contains(from, pi) || !domain.certainly_contains(to, pi)) {
    throw DomainError("grid [" + config.from.to_string() + ", " + config.to.to_string() + "] leaves the proven domain " +
                      domain.to_string() + " of " + std::string(to_string(config.target)));
  }
  std::vector<ScanRow> rows;
  for (const auto& x : uniform_grid(from, to, config.steps)) rows.push_back(scan_point(config.target, x, config.trig_width));
  return rows;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << "x,lhs_lo,lhs_hi,val_lo,val_hi,rhs_lo,rhs_hi,residual_lo,residual_hi,holds,x_decimal\n";
  for (const auto& r : rows) {
    out << r.x.to_string() << "," << interval_cells(r.lhs_bound) << "," << interval_cells(r.value) << ","
        << interval_cells(r.rhs_bound) << "," << interval_cells(r.residual) << "," << to_string(r.holds) << ","
        << r.x.to_decimal(20) << "\n";
  }
  return out.str();
}

std::string_view to_string(LimitStatus s) {
  switch (s) {
    case LimitStatus::Certified: return "certified";
    case LimitStatus::Violated: return "violated";
    case LimitStatus::Undecided: return "undecided";
  }
  return "undecided";
}

namespace {

LimitCheck limit_check(const BigRational& x, const RationalInterval& limit, const BigRational& tolerance,
                       const RationalInterval& lower, const BigRational& upper) {
  LimitCheck check;
  check.x = x;
  check.tolerance = tolerance;
  check.ratio = wilker_ratio(x, tolerance / 1024);
  check.deviation = check.ratio - limit;
  if (-tolerance < check.deviation.lo() && check.deviation.hi() < tolerance) {
    check.status = LimitStatus::Certified;
  } else if (check.deviation.lo() >= tolerance || check.deviation.hi() <= -tolerance) {
    check.status = LimitStatus::Violated;
  }
  if (lower.hi() < check.ratio.lo() && check.ratio.hi() < upper) {
    check.bracketed = LimitStatus::Certified;
  } else if (check.ratio.hi() <= lower.lo() || check.ratio.lo() >= upper) {
    check.bracketed = LimitStatus::Violated;
  }
  return check;
}

}  // namespace

LimitsReport check_limits(const BigRational& eps, const BigRational& zero_tolerance,
                          const BigRational& half_pi_tolerance) {
  const RationalInterval pi = pi_enclosure(128);
  if (eps.sign() <= 0 || !(eps < pi.lo() / 4)) throw std::invalid_argument("eps must lie in (0, pi/4)");
  if (zero_tolerance.sign() <= 0 || half_pi_tolerance.sign() <= 0) {
    throw std::invalid_argument("tolerances must be positive");
  }
  const RationalInterval low = sixteen_over_pi4(pi);
  const BigRational high(8, 45);
  LimitsReport report;
  report.eps = eps;
  report.near_zero = limit_check(eps, RationalInterval(high), zero_tolerance, low, high);
  report.near_half_pi = limit_check(Endpoint::half_pi_minus(eps).resolve_below(pi), low, half_pi_tolerance, low, high);
  return report;
}

std::string_view to_string(PairOrder o) {
  switch (o) {
    case PairOrder::Decreasing: return "decreasing";
    case PairOrder::Increasing: return "increasing";
    case PairOrder::Undecided: return "undecided";
  }
  return "undecided";
}

MonotonicityReport monotonicity_spotcheck(const std::vector<BigRational>& grid, const BigRational& width) {
  MonotonicityReport report;
  for (size_t i = 0; i + 1 < grid.size(); ++i) {
    if (grid[i + 1] < grid[i]) throw std::invalid_argument("grid must be nondecreasing");
  }
  for (size_t i = 0; i + 1 < grid.size(); ++i) {
    MonotonicityPair pair;
    pair.x0 = grid[i];
    pair.x1 = grid[i + 1];
    for (const BigRational& w : {width, retry_trig_width()}) {
      pair.r0 = wilker_ratio(pair.x0, w);
      pair.r1 = wilker_ratio(pair.x1, w);
      if (pair.x0 == pair.x1) break;
      if (certainly_less(pair.r1, pair.r0)) {
        pair.order = PairOrder::Decreasing;
      } else if (certainly_less(pair.r0, pair.r1)) {
        pair.order = PairOrder::Increasing;
      }
      if (pair.order != PairOrder::Undecided || !(w > retry_trig_width())) break;
    }
    if (pair.order == PairOrder::Undecided) ++report.undecided;
    if (pair.order != PairOrder::Decreasing) report.strictly_decreasing = false;
    report.pairs.push_back(std::move(pair));
  }
  return report;
}

}  // namespace wilker
