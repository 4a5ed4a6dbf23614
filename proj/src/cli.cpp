#include "wilker/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "wilker/numscan.hpp"
#include "wilker/report.hpp"

namespace wilker {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitRefuted = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& item : items) s += (s.empty() ? "" : ", ") + item;
  return s;
}

std::vector<std::string> theorem_names() {
  std::vector<std::string> names;
  for (TheoremId id : all_theorem_ids()) names.emplace_back(to_string(id));
  return names;
}

std::vector<std::string> scan_names() {
  std::vector<std::string> names;
  for (ScanTarget t : all_scan_targets()) names.emplace_back(to_string(t));
  return names;
}

TheoremId require_theorem(const std::string& text) {
  if (auto id = parse_theorem_id(text)) return *id;
  throw UsageError("unknown theorem id '" + text + "'; valid ids: " + join(theorem_names()));
}

ScanTarget require_scan_target(const std::string& text) {
  if (auto t = parse_scan_target(text)) return *t;
  throw UsageError("unknown scan id '" + text + "'; valid ids: " + join(scan_names()));
}

BigRational require_rational(const std::string& text, const std::string& flag) {
  try {
    return BigRational::parse(text);
  } catch (const std::exception&) {
    throw UsageError("invalid value for " + flag + ": '" + text + "'");
  }
}

/// "0.02", "1/3", "pi/2", "pi/2 - 0.01".
Endpoint parse_endpoint(std::string text, const std::string& flag) {
  text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
  const std::string head = "pi/2";
  if (text.rfind(head, 0) == 0) {
    const std::string rest = text.substr(head.size());
    if (rest.empty()) return Endpoint::half_pi_minus(BigRational(0));
    if (rest[0] == '-') return Endpoint::half_pi_minus(require_rational(rest.substr(1), flag));
    throw UsageError("invalid value for " + flag + ": '" + text + "' (expected pi/2 - r)");
  }
  return Endpoint::rational(require_rational(text, flag));
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  std::vector<std::string> names(allowed.begin(), allowed.end());
  if (std::find(names.begin(), names.end(), format) == names.end()) {
    throw UsageError("unsupported --format '" + format + "'; choose one of: " + join(names));
  }
}

void emit(const std::string& data, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << data;
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Proven: return kExitOk;
    case Verdict::Refuted: return kExitRefuted;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

struct Options {
  std::string theorem;
  std::string poly;
  int pi_bits = kDefaultMaxBits;
  std::string from;
  std::string to;
  int steps = 0;
  std::string width;
  std::string format;
  std::string out;
  std::string eps = "1/100";
};

int cmd_prove(const Options& o, std::ostream& out, std::ostream& err) {
  const TheoremId id = require_theorem(o.theorem);
  const std::string format = o.format.empty() ? "json" : o.format;
  require_format(format, {"json", "text"});
  if (o.pi_bits < 8) throw UsageError("--pi-bits must be at least 8");
  const InequalitySpec spec = build_spec(id);
  if (spec.numeric_only) {
    throw UsageError(std::string(to_string(id)) + " has no symbolic certificate; use the scan command");
  }
  const CertificateReport report = verify_inequality(spec, o.pi_bits);
  emit(format == "json" ? report_to_json(report).dump(2) + "\n" : report_to_text(report), o.out, out);
  if (report.verdict == Verdict::Proven && !report.implies_claim) {
    err << "warning: " << to_string(id) << " certifies a " << to_string(report.bound_relation)
        << " bound of the difference; the certified sign does not imply the claimed inequality\n";
  }
  return exit_for(report.verdict);
}

int cmd_dump(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "text" : o.format;
  require_format(format, {"text", "json"});
  static const std::vector<std::pair<std::string, TheoremId>> owners = {
      {"A", TheoremId::Thm1Left},  {"B", TheoremId::Thm1Left},  {"C", TheoremId::Thm1Left},
      {"D", TheoremId::Thm1Right}, {"E", TheoremId::Thm2Left}, {"F", TheoremId::Thm2Right}};
  auto owner = std::find_if(owners.begin(), owners.end(), [&](const auto& p) { return p.first == o.poly; });
  if (owner == owners.end()) throw UsageError("unknown --poly '" + o.poly + "'; valid names: A, B, C, D, E, F");

  TheoremId id = owner->second;
  if (!o.theorem.empty()) {
    id = require_theorem(o.theorem);
    const bool shared = o.poly == "B" || o.poly == "C";
    const bool ok = shared ? (id == TheoremId::Thm1Left || id == TheoremId::Thm1Right) : id == owner->second;
    if (!ok) throw UsageError(o.poly + " does not occur in the certificate of " + std::string(to_string(id)));
  }
  const CertificateReport report = verify_inequality(build_spec(id), o.pi_bits);
  std::optional<Poly> poly;
  if (report.numerator_name == o.poly) poly = report.numerator.lifted_shifted;
  for (const auto& f : report.denominator_factors)
    if (f.appendix_name == o.poly) poly = f.certificate.lifted_shifted;
  if (!poly) throw UsageError(o.poly + " not found in the certificate of " + std::string(to_string(id)));
  emit(format == "json" ? poly_to_json(*poly).dump() + "\n" : render(*poly) + "\n", o.out, out);
  return kExitOk;
}

std::pair<std::string, std::string> default_range(ScanTarget t) {
  switch (t) {
    case ScanTarget::Thm1:
    case ScanTarget::Thm1Left:
    case ScanTarget::Thm1Right: return {"0.02", "0.98"};
    case ScanTarget::Thm2:
    case ScanTarget::Thm2Left: return {"pi/2 - 0.32", "pi/2 - 0.01"};
    case ScanTarget::Thm2Right: return {"pi/2 - 0.49", "pi/2 - 0.01"};
    default: return {"0.02", "pi/2 - 0.02"};
  }
}

std::string rows_to_json(const std::vector<ScanRow>& rows) {
  Json arr = Json::array();
  auto cell = [](const std::optional<RationalInterval>& i) -> Json {
    if (!i) return nullptr;
    const RationalInterval r = i->outward(128);
    return Json::array({r.lo().to_string(), r.hi().to_string()});
  };
  for (const auto& r : rows) {
    Json j;
    j["x"] = r.x.to_string();
    j["lhs"] = cell(r.lhs_bound);
    j["value"] = cell(r.value);
    j["rhs"] = cell(r.rhs_bound);
    j["residual"] = cell(r.residual);
    j["residual_kind"] = to_string(r.residual_kind);
    j["holds"] = to_string(r.holds);
    j["x_decimal"] = r.x.to_decimal(20);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

int cmd_scan(const Options& o, std::ostream& out) {
  if (o.theorem.empty()) throw UsageError("scan needs --theorem; valid ids: " + join(scan_names()));
  const ScanTarget target = require_scan_target(o.theorem);
  const std::string format = o.format.empty() ? "csv" : o.format;
  require_format(format, {"csv", "json"});
  const auto [from_default, to_default] = default_range(target);
  ScanConfig config;
  config.target = target;
  config.from = parse_endpoint(o.from.empty() ? from_default : o.from, "--from");
  config.to = parse_endpoint(o.to.empty() ? to_default : o.to, "--to");
  config.steps = o.steps == 0 ? 50 : o.steps;
  if (config.steps < 2) throw UsageError("--steps must be at least 2");
  if (!o.width.empty()) {
    config.trig_width = require_rational(o.width, "--width");
    if (config.trig_width.sign() <= 0) throw UsageError("--width must be positive");
  }
  const std::vector<ScanRow> rows = scan(config);
  emit(format == "csv" ? scan_to_csv(rows) : rows_to_json(rows), o.out, out);
  const bool any_no = std::any_of(rows.begin(), rows.end(), [](const ScanRow& r) { return r.holds == Holds::No; });
  const bool all_yes = std::all_of(rows.begin(), rows.end(), [](const ScanRow& r) { return r.holds == Holds::Yes; });
  return any_no ? kExitRefuted : all_yes ? kExitOk : kExitInconclusive;
}

Json limit_to_json(const LimitCheck& c) {
  Json j;
  j["x"] = c.x.to_string();
  j["x_decimal"] = c.x.to_decimal(20);
  const RationalInterval ratio = c.ratio.outward(128);
  const RationalInterval dev = c.deviation.outward(128);
  j["ratio"] = Json::array({ratio.lo().to_string(), ratio.hi().to_string()});
  j["deviation"] = Json::array({dev.lo().to_string(), dev.hi().to_string()});
  j["deviation_decimal"] = Json::array({dev.lo().to_decimal(12), dev.hi().to_decimal(12)});
  j["tolerance"] = c.tolerance.to_string();
  j["status"] = to_string(c.status);
  j["bracketed"] = to_string(c.bracketed);
  return j;
}

int cmd_limits(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "json" : o.format;
  require_format(format, {"json", "text"});
  const BigRational eps = require_rational(o.eps, "--eps");
  LimitsReport limits;
  try {
    limits = check_limits(eps);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const int steps = o.steps == 0 ? 20 : o.steps;
  if (steps < 2) throw UsageError("--steps must be at least 2");
  const std::vector<BigRational> grid = uniform_grid(limits.near_zero.x, limits.near_half_pi.x, steps);
  const MonotonicityReport mono = monotonicity_spotcheck(grid);

  std::string data;
  if (format == "json") {
    Json j;
    j["eps"] = eps.to_string();
    j["near_zero"] = limit_to_json(limits.near_zero);
    j["near_half_pi"] = limit_to_json(limits.near_half_pi);
    Json pairs = Json::array();
    for (const auto& p : mono.pairs)
      pairs.push_back(Json{{"x0", p.x0.to_string()}, {"x1", p.x1.to_string()}, {"order", to_string(p.order)}});
    j["monotonicity"] = Json{{"strictly_decreasing", mono.strictly_decreasing}, {"undecided", mono.undecided},
                             {"pairs", std::move(pairs)}};
    data = j.dump(2) + "\n";
  } else {
    std::ostringstream s;
    auto line = [&](const char* name, const LimitCheck& c, const char* limit) {
      s << name << ": x = " << c.x.to_decimal(20) << ", ratio - " << limit << " in [" << c.deviation.lo().to_decimal(12)
        << ", " << c.deviation.hi().to_decimal(12) << "], tolerance " << c.tolerance.to_string() << ": "
        << to_string(c.status) << "; inside (16/pi^4, 8/45): " << to_string(c.bracketed) << "\n";
    };
    line("near 0", limits.near_zero, "8/45");
    line("near pi/2", limits.near_half_pi, "16/pi^4");
    s << "monotonicity on " << steps << " points: " << (mono.strictly_decreasing ? "strictly decreasing" : "not certified")
      << ", undecided pairs " << mono.undecided << "\n";
    data = s.str();
  }
  emit(data, o.out, out);

  const std::vector<LimitStatus> statuses = {limits.near_zero.status, limits.near_half_pi.status,
                                             limits.near_zero.bracketed, limits.near_half_pi.bracketed};
  bool violated = std::count(statuses.begin(), statuses.end(), LimitStatus::Violated) > 0;
  bool undecided = std::count(statuses.begin(), statuses.end(), LimitStatus::Undecided) > 0 || mono.undecided > 0;
  violated = violated || std::any_of(mono.pairs.begin(), mono.pairs.end(),
                                     [](const MonotonicityPair& p) { return p.order == PairOrder::Increasing; });
  return violated ? kExitRefuted : undecided ? kExitInconclusive : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certificates and rigorous scans for Wilker-type inequalities", "wilkercert"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--pi-bits", o.pi_bits, "Refinement cap for pi enclosures")->default_val(kDefaultMaxBits);
    sub->add_option("--format", o.format, "Output format");
    sub->add_option("--out", o.out, "Write data here instead of stdout");
  };

  CLI::App* prove = app.add_subcommand("prove", "Build and check the certificate of a theorem");
  prove->add_option("--theorem", o.theorem, "Theorem id")->required();
  add_common(prove);

  CLI::App* dump = app.add_subcommand("dump", "Print an appendix polynomial A..F");
  dump->add_option("--theorem", o.theorem, "Theorem id");
  dump->add_option("--poly", o.poly, "A, B, C, D, E or F")->required();
  add_common(dump);

  CLI::App* scan_cmd = app.add_subcommand("scan", "Rigorous grid scan");
  scan_cmd->add_option("--theorem", o.theorem, "Scan id")->required();
  scan_cmd->add_option("--from", o.from, "Grid start (rational or pi/2 - r)");
  scan_cmd->add_option("--to", o.to, "Grid end (rational or pi/2 - r)");
  scan_cmd->add_option("--steps", o.steps, "Number of grid points (>= 2)");
  scan_cmd->add_option("--width", o.width, "Target enclosure width, e.g. 2^-40");
  add_common(scan_cmd);

  CLI::App* limits = app.add_subcommand("limits", "Limits of the ratio at 0 and pi/2 and a monotonicity check");
  limits->add_option("--eps", o.eps, "Distance from the endpoints")->default_val("1/100");
  limits->add_option("--steps", o.steps, "Monotonicity grid points (>= 2)");
  add_common(limits);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (!o.theorem.empty() && !parse_theorem_id(o.theorem) && !parse_scan_target(o.theorem)) {
      err << "valid theorem ids: " << join(theorem_names()) << "\n";
    }
    return kExitUsage;
  }

  try {
    if (prove->parsed()) return cmd_prove(o, out, err);
    if (dump->parsed()) return cmd_dump(o, out);
    if (scan_cmd->parsed()) return cmd_scan(o, out);
    return cmd_limits(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace wilker
