#include "myers/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "myers/ambrose.hpp"
#include "myers/comparison.hpp"
#include "myers/criteria.hpp"
#include "myers/model_space.hpp"
#include "myers/numerics.hpp"

namespace myers::cli {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

bool valid_key(const std::string& k) {
  if (k.empty()) return false;
  for (char c : k)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

Config Config::from_string(const std::string& text, const std::string& origin) {
  Config cfg;
  cfg.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!valid_key(key))
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": invalid key '" + key + "'");
    if (value.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty value for key '" +
                        key + "'");
    const auto it = cfg.entries_.find(key);
    if (it != cfg.entries_.end())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key '" + key +
                        "' (first at line " + std::to_string(it->second.line) + ")");
    cfg.entries_[key] = Entry{value, lineno, false};
  }
  return cfg;
}

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::ostringstream text;
  text << in.rdbuf();
  return from_string(text.str(), path);
}

bool Config::has(const std::string& key) const { return entries_.count(key) != 0; }

std::string Config::require_string(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end())
    throw ConfigError(origin_ + ": missing required key '" + key + "'");
  it->second.used = true;
  return it->second.value;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
  return has(key) ? require_string(key) : fallback;
}

double Config::require_double(const std::string& key) const {
  const std::string raw = require_string(key);
  const auto& entry = entries_.at(key);
  try {
    std::size_t pos = 0;
    const double v = std::stod(raw, &pos);
    if (pos != raw.size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(origin_ + ":" + std::to_string(entry.line) + ": key '" + key +
                      "': expected a real number, got '" + raw + "'");
  }
}

double Config::get_double(const std::string& key, double fallback) const {
  return has(key) ? require_double(key) : fallback;
}

int Config::require_int(const std::string& key) const {
  const std::string raw = require_string(key);
  const auto& entry = entries_.at(key);
  try {
    std::size_t pos = 0;
    const long v = std::stol(raw, &pos);
    if (pos != raw.size()) throw std::invalid_argument(raw);
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw ConfigError(origin_ + ":" + std::to_string(entry.line) + ": key '" + key +
                      "': expected an integer, got '" + raw + "'");
  }
}

int Config::get_int(const std::string& key, int fallback) const {
  return has(key) ? require_int(key) : fallback;
}

std::vector<double> Config::require_double_list(const std::string& key) const {
  const std::string raw = require_string(key);
  const auto& entry = entries_.at(key);
  std::vector<double> out;
  std::istringstream in(raw);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    try {
      std::size_t pos = 0;
      const double v = std::stod(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError(origin_ + ":" + std::to_string(entry.line) + ": key '" + key +
                        "': expected a comma-separated list of reals, got '" + item + "'");
    }
  }
  if (out.empty())
    throw ConfigError(origin_ + ":" + std::to_string(entry.line) + ": key '" + key +
                      "': empty list");
  return out;
}

void Config::override_value(const std::string& key, const std::string& value) {
  entries_[key] = Entry{value, 0, false};
}

std::vector<std::string> Config::keys_with_prefix(const std::string& prefix) const {
  std::vector<std::string> out;
  for (const auto& [k, e] : entries_)
    if (k.rfind(prefix, 0) == 0) out.push_back(k);
  return out;  // map order: already sorted
}

Config Config::point_config() const {
  Config c;
  c.origin_ = origin_;
  for (const auto& [k, e] : entries_) {
    if (k.rfind("sweep_", 0) == 0 || k == "workflow") continue;
    c.entries_[k] = Entry{e.value, e.line, false};
  }
  return c;
}

void Config::reject_unknown_keys() const {
  std::vector<const std::pair<const std::string, Entry>*> unknown;
  for (const auto& kv : entries_)
    if (!kv.second.used) unknown.push_back(&kv);
  if (unknown.empty()) return;
  std::sort(unknown.begin(), unknown.end(),
            [](auto* a, auto* b) { return a->second.line < b->second.line; });
  std::string msg = origin_ + ": ";
  for (std::size_t i = 0; i < unknown.size(); ++i) {
    if (i) msg += "; ";
    msg += "unknown key '" + unknown[i]->first + "' (line " +
           std::to_string(unknown[i]->second.line) + ")";
  }
  throw ConfigError(msg);
}

std::string format_real(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string short_real(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

std::string cell(const std::optional<double>& v) {
  return v ? format_real(*v) : std::string{};
}

const char* verdict_name(ComparisonVerdict v) {
  switch (v) {
    case ComparisonVerdict::holds: return "holds";
    case ComparisonVerdict::hypothesis_violated: return "hypothesis_violated";
    case ComparisonVerdict::conclusion_violated: return "conclusion_violated";
    case ComparisonVerdict::empty_window: return "empty_window";
  }
  return "?";
}

const char* trend_name(IntegralTrend t) {
  switch (t) {
    case IntegralTrend::diverging: return "diverging-trend";
    case IntegralTrend::converging: return "converging-trend";
    case IntegralTrend::inconclusive: return "inconclusive";
  }
  return "?";
}

int exit_code_for(ComparisonVerdict v) {
  switch (v) {
    case ComparisonVerdict::holds: return 0;
    case ComparisonVerdict::conclusion_violated: return 2;
    case ComparisonVerdict::hypothesis_violated: return 3;
    case ComparisonVerdict::empty_window: return 1;
  }
  return 1;
}

struct CompareOutcome {
  std::string variant;
  std::string profile;
  int n = 0;
  std::optional<double> H, delta, a, k, t;
  double step = 0.0;
  ComparisonReport rep;
};

CompareOutcome compare_core(const Config& cfg, const RunOptions& opts) {
  CompareOutcome out;
  const RadialManifold m = build_manifold(cfg);
  out.profile = m.profile.name;
  out.n = m.n;
  out.variant = cfg.require_string("variant");
  out.step = opts.step.value_or(cfg.get_double("step", 1e-2));
  const double r_max_test = cfg.get_double("r_max_test", 50.0);

  if (out.variant == "thm21") {
    out.delta = cfg.require_double("delta");
    out.H = cfg.require_double("H");
    out.rep = verify_thm21(m, *out.delta, *out.H, out.step, r_max_test);
  } else if (out.variant == "thm22") {
    out.a = cfg.require_double("a");
    out.H = cfg.require_double("H");
    out.rep = verify_thm22(m, *out.a, *out.H, out.step, r_max_test);
  } else if (out.variant == "mf-bounds") {
    out.delta = cfg.require_double("delta");
    out.rep = verify_mf_bounds(m, *out.delta, out.step, r_max_test);
  } else if (out.variant == "mf-bounds-k") {
    out.k = cfg.require_double("k");
    out.rep = verify_mf_bounds_k(m, *out.k, out.step, r_max_test);
  } else if (out.variant == "ibp-chain") {
    out.delta = cfg.require_double("delta");
    out.H = cfg.require_double("H");
    out.t = cfg.require_double("t");
    const double slack = verify_ibp_chain(m, *out.delta, *out.H, *out.t);
    ComparisonReport rep;
    rep.window_lo = pole_radius;
    rep.window_hi = *out.t;
    double hyp = std::numeric_limits<double>::infinity();
    for (double r : linspace(pole_radius, *out.t, 200))
      hyp = std::min({hyp, m.ric_f(r) - (m.n - 1) * *out.H,
                      *out.delta * (r + 1.0) - std::abs(m.weight.f(r))});
    rep.hypothesis_slack = hyp;
    rep.conclusion_slack = slack;
    const double sn = sn_h(*out.H, *out.t);
    const double lhs = sn * sn * m.m_f(*out.t);
    rep.grid.push_back({*out.t, lhs, lhs + slack});
    if (hyp < -slack_tolerance)
      rep.verdict = ComparisonVerdict::hypothesis_violated;
    else if (slack < -slack_tolerance)
      rep.verdict = ComparisonVerdict::conclusion_violated;
    else
      rep.verdict = ComparisonVerdict::holds;
    out.rep = rep;
  } else {
    throw ConfigError("unknown compare variant '" + out.variant +
                      "' (expected thm21|thm22|mf-bounds|mf-bounds-k|ibp-chain)");
  }
  cfg.reject_unknown_keys();
  return out;
}

std::string compare_csv_header() {
  return "variant,profile,n,H,delta,a,k,step,t,lhs,rhs,slack";
}

std::string compare_summary_header() {
  return "variant,profile,n,H,delta,a,k,step,hypothesis_slack,conclusion_slack,verdict";
}

std::string compare_summary_row(const CompareOutcome& o) {
  std::ostringstream os;
  os << o.variant << ',' << o.profile << ',' << o.n << ',' << cell(o.H) << ','
     << cell(o.delta) << ',' << cell(o.a) << ',' << cell(o.k) << ',' << format_real(o.step)
     << ',' << format_real(o.rep.hypothesis_slack) << ','
     << format_real(o.rep.conclusion_slack) << ',' << verdict_name(o.rep.verdict);
  return os.str();
}

struct CriterionOutcome {
  CriterionParams params;
  std::string profile;
  std::optional<double> b_col, r0_col;
  CompactnessVerdict verdict;
};

CriterionVariant parse_criterion_variant(const std::string& s) {
  if (s == "C1") return CriterionVariant::C1;
  if (s == "C2") return CriterionVariant::C2;
  if (s == "C3") return CriterionVariant::C3;
  if (s == "C4") return CriterionVariant::C4;
  if (s == "C5") return CriterionVariant::C5;
  if (s == "C6") return CriterionVariant::C6;
  throw ConfigError("unknown criterion variant '" + s + "' (expected C1..C6)");
}

const char* criterion_variant_name(CriterionVariant v) {
  switch (v) {
    case CriterionVariant::C1: return "C1";
    case CriterionVariant::C2: return "C2";
    case CriterionVariant::C3: return "C3";
    case CriterionVariant::C4: return "C4";
    case CriterionVariant::C5: return "C5";
    case CriterionVariant::C6: return "C6";
    case CriterionVariant::Wan: return "wan";
    case CriterionVariant::Qiu: return "qiu";
    case CriterionVariant::CGT: return "cgt";
  }
  return "?";
}

C3Convention parse_c3_convention(const Config& cfg) {
  const std::string c = cfg.get_string("c3_convention", "proof");
  if (c == "proof") return C3Convention::proof;
  if (c == "statement") return C3Convention::statement;
  throw ConfigError("c3_convention must be 'proof' or 'statement'");
}

CriterionOutcome criterion_core(const Config& cfg, const RunOptions&) {
  CriterionOutcome out;
  const RadialManifold m = build_manifold(cfg);
  out.profile = m.profile.name;

  CriterionParams p;
  p.variant = parse_criterion_variant(cfg.require_string("variant"));
  p.n = m.n;
  p.eps = cfg.get_double("eps", 1.0);
  p.eps1 = cfg.get_double("eps1", 0.01);

  GrowthFunction h;
  switch (p.variant) {
    case CriterionVariant::C1:
    case CriterionVariant::C3:
    case CriterionVariant::C5:
      h = build_growth(cfg);
      if (h.kind == GrowthFunction::Kind::power_law) {
        out.b_col = h.b;
        out.r0_col = h.r0;
      }
      break;
    default:
      p.b = cfg.require_double("b");
      p.r0 = cfg.require_double("r0");
      h = GrowthFunction::power_law(p.b, p.r0);
      out.b_col = p.b;
      out.r0_col = p.r0;
      break;
  }
  switch (p.variant) {
    case CriterionVariant::C1:
    case CriterionVariant::C2:
      p.delta = cfg.require_double("delta");
      break;
    case CriterionVariant::C3:
    case CriterionVariant::C4:
      p.a = cfg.require_double("a");
      if (p.variant == CriterionVariant::C3) p.c3_convention = parse_c3_convention(cfg);
      break;
    default:
      p.k = cfg.require_double("k");
      break;
  }

  const double r_max_test = cfg.get_double("r_max_test", 50.0);
  const int grid_points = cfg.get_int("grid_points", 2000);
  cfg.reject_unknown_keys();

  out.params = p;
  out.verdict = evaluate_criterion(m, p, h, r_max_test, grid_points);
  return out;
}

std::string criterion_csv_header() {
  return "variant,n,delta,a,k,b,r0,eps,eps1,C,min_margin,criterion_met,known_compact,"
         "conjugate_time,notes";
}

std::string criterion_csv_row(const CriterionOutcome& o) {
  const CriterionParams& p = o.params;
  auto used = [&](CriterionVariant a, CriterionVariant b, double v) -> std::optional<double> {
    if (p.variant == a || p.variant == b) return v;
    return std::nullopt;
  };
  std::ostringstream os;
  os << criterion_variant_name(p.variant) << ',' << p.n << ','
     << cell(used(CriterionVariant::C1, CriterionVariant::C2, p.delta)) << ','
     << cell(used(CriterionVariant::C3, CriterionVariant::C4, p.a)) << ','
     << cell(used(CriterionVariant::C5, CriterionVariant::C6, p.k)) << ','
     << cell(o.b_col) << ',' << cell(o.r0_col) << ',' << format_real(p.eps) << ','
     << format_real(p.eps1) << ',' << format_real(o.verdict.constant_used) << ','
     << format_real(o.verdict.min_margin) << ','
     << (o.verdict.criterion_met ? "true" : "false") << ','
     << (o.verdict.known_compact ? (*o.verdict.known_compact ? "true" : "false") : "")
     << ',' << cell(o.verdict.cross_check_conjugate_time) << ','
     << csv_quote(o.verdict.notes);
  return os.str();
}

}  // namespace

RadialManifold build_manifold(const Config& cfg) {
  const int n = cfg.require_int("n");
  const std::string profile_id = cfg.require_string("profile");
  WarpProfile profile;
  if (profile_id == "sphere")
    profile = WarpProfile::space_form(1.0);
  else if (profile_id == "euclidean")
    profile = WarpProfile::space_form(0.0);
  else if (profile_id == "hyperbolic")
    profile = WarpProfile::space_form(-1.0);
  else if (profile_id == "space_form")
    profile = WarpProfile::space_form(cfg.require_double("profile_h"));
  else if (profile_id == "perturbed_sine")
    profile = WarpProfile::perturbed_sine(cfg.require_double("beta"));
  else if (profile_id == "perturbed_linear")
    profile = WarpProfile::perturbed_linear(cfg.require_double("beta"));
  else if (profile_id == "tabulated")
    profile = WarpProfile::tabulated_from_file(cfg.require_string("profile_file"));
  else
    throw ConfigError("unknown profile '" + profile_id + "'");
  if (profile_id != "tabulated") profile.name = profile_id;

  const std::string weight_id = cfg.get_string("weight", "zero");
  WeightFunction weight;
  if (weight_id == "zero")
    weight = WeightFunction::zero();
  else if (weight_id == "linear")
    weight = WeightFunction::linear(cfg.require_double("weight_delta"));
  else if (weight_id == "bounded_sine")
    weight = WeightFunction::bounded_sine(cfg.require_double("weight_delta"));
  else if (weight_id == "log_growth")
    weight = WeightFunction::log_growth(cfg.require_double("weight_c"));
  else if (weight_id == "tabulated")
    weight = WeightFunction::tabulated_from_file(cfg.require_string("weight_file"));
  else
    throw ConfigError("unknown weight '" + weight_id + "'");

  return make_manifold(n, std::move(profile), std::move(weight));
}

GrowthFunction build_growth(const Config& cfg) {
  const std::string kind = cfg.require_string("h");
  if (kind == "power_law")
    return GrowthFunction::power_law(cfg.require_double("h_b"), cfg.require_double("h_r0"));
  if (kind == "constant") return GrowthFunction::constant(cfg.require_double("h_c"));
  if (kind == "tabulated")
    return GrowthFunction::tabulated_from_file(cfg.require_string("h_file"));
  throw ConfigError("unknown growth function '" + kind +
                    "' (expected power_law|constant|tabulated)");
}

RunResult run_compare(const Config& cfg, const RunOptions& opts) {
  const CompareOutcome o = compare_core(cfg, opts);
  RunResult res;
  res.exit_code = exit_code_for(o.rep.verdict);

  std::ostringstream table;
  table << "compare variant=" << o.variant << " profile=" << o.profile << " n=" << o.n
        << '\n';
  table << "  window = [" << short_real(o.rep.window_lo) << ", "
        << short_real(o.rep.window_hi) << "]  (" << o.rep.grid.size() << " grid points)\n";
  table << "  hypothesis_slack = " << short_real(o.rep.hypothesis_slack) << '\n';
  table << "  conclusion_slack = " << short_real(o.rep.conclusion_slack) << '\n';
  table << "  verdict: " << verdict_name(o.rep.verdict) << '\n';
  if (!o.rep.note.empty()) table << "  note: " << o.rep.note << '\n';
  res.table = table.str();

  res.csv.push_back(compare_csv_header());
  for (const auto& g : o.rep.grid) {
    std::ostringstream row;
    row << o.variant << ',' << o.profile << ',' << o.n << ',' << cell(o.H) << ','
        << cell(o.delta) << ',' << cell(o.a) << ',' << cell(o.k) << ','
        << format_real(o.step) << ',' << format_real(g.t) << ',' << format_real(g.lhs)
        << ',' << format_real(g.rhs) << ',' << format_real(g.rhs - g.lhs);
    res.csv.push_back(row.str());
  }
  return res;
}

RunResult run_constants(const Config& cfg, const RunOptions&) {
  const std::string variant = cfg.require_string("variant");
  std::optional<double> delta, a, k, b, r0, nu, delta1, eps, eps1;
  std::optional<int> n;
  double value = 0.0;
  std::string branch;
  std::optional<EpsilonOptimum> opt;

  auto tail_branch = [](const GrowthFunction& h, double e) {
    return std::isinf(tail_integral(h, e)) ? "divergent-tail(eps1)" : "finite-tail";
  };

  if (variant == "C1") {
    n = cfg.require_int("n");
    delta = cfg.require_double("delta");
    eps = cfg.get_double("eps", 1.0);
    eps1 = cfg.get_double("eps1", 0.01);
    const auto h = build_growth(cfg);
    value = const_c1(h, *n, *delta, *eps, *eps1);
    branch = tail_branch(h, *eps);
  } else if (variant == "C2") {
    n = cfg.require_int("n");
    delta = cfg.require_double("delta");
    b = cfg.require_double("b");
    r0 = cfg.require_double("r0");
    eps = cfg.get_double("eps", 1.0);
    eps1 = cfg.get_double("eps1", 0.01);
    value = const_c2(*n, *b, *r0, *delta, *eps, *eps1);
    branch = *b > 1.0 ? "b>1" : "b<=1(eps1)";
  } else if (variant == "C3") {
    n = cfg.require_int("n");
    a = cfg.require_double("a");
    eps = cfg.get_double("eps", 1.0);
    eps1 = cfg.get_double("eps1", 0.01);
    const auto conv = parse_c3_convention(cfg);
    const auto h = build_growth(cfg);
    value = const_c3(h, *n, *a, *eps, *eps1, conv);
    branch = std::string(tail_branch(h, *eps)) +
             (conv == C3Convention::proof ? ",proof(2a)" : ",statement(a)");
  } else if (variant == "C4") {
    n = cfg.require_int("n");
    a = cfg.require_double("a");
    b = cfg.require_double("b");
    r0 = cfg.require_double("r0");
    eps = cfg.get_double("eps", 1.0);
    eps1 = cfg.get_double("eps1", 0.01);
    value = const_c4(*n, *b, *r0, *a, *eps, *eps1);
    branch = *b > 2.0 ? "b>2" : (*b > 1.0 ? "1<b<=2" : "b<=1(eps1)");
    if (*b > 2.0) opt = epsilon_optimize(CriterionVariant::C4, *n, 0.0, *b, *r0, *a);
  } else if (variant == "C5") {
    n = cfg.require_int("n");
    k = cfg.require_double("k");
    eps = cfg.get_double("eps", 1.0);
    eps1 = cfg.get_double("eps1", 0.01);
    const auto h = build_growth(cfg);
    value = const_c5(h, *n, *k, *eps, *eps1);
    branch = tail_branch(h, *eps);
  } else if (variant == "C6") {
    n = cfg.require_int("n");
    k = cfg.require_double("k");
    b = cfg.require_double("b");
    r0 = cfg.require_double("r0");
    eps = cfg.get_double("eps", 1.0);
    eps1 = cfg.get_double("eps1", 0.01);
    value = const_c6(*n, *k, *b, *r0, *eps, *eps1);
    branch = *b > 2.0 ? "b>2" : (*b > 1.0 ? "1<b<=2" : "b<=1(eps1)");
    if (*b > 2.0) opt = epsilon_optimize(CriterionVariant::C6, *n, *k, *b, *r0, 0.0);
  } else if (variant == "wan") {
    n = cfg.require_int("n");
    b = cfg.require_double("b");
    r0 = cfg.require_double("r0");
    eps = cfg.get_double("eps", 1.0);
    value = wan_constant(*n, *b, *r0, *eps);
    branch = *b > 2.0 ? "b>2" : "b=2";
  } else if (variant == "qiu") {
    n = cfg.require_int("n");
    delta1 = cfg.require_double("delta1");
    eps = cfg.get_double("eps", 1.0);
    eps1 = cfg.get_double("eps1", 0.01);
    const auto h = build_growth(cfg);
    value = qiu_delta2(h, *n, *delta1, *eps, *eps1);
    branch = tail_branch(h, *eps);
  } else if (variant == "cgt") {
    r0 = cfg.require_double("r0");
    nu = cfg.require_double("nu");
    value = cgt_diameter(*r0, *nu);
    branch = "diameter";
  } else {
    throw ConfigError("unknown constants variant '" + variant +
                      "' (expected C1..C6|wan|qiu|cgt)");
  }
  cfg.reject_unknown_keys();

  RunResult res;
  std::ostringstream table;
  table << "constant " << variant << " = " << format_real(value) << "  [branch: " << branch
        << "]\n";
  if (branch.rfind("divergent", 0) == 0)
    table << "  divergent growth tail: any positive constant works; reporting eps1\n";
  if (opt) {
    const double gap = std::abs(opt->value - value) / std::max(1.0, std::abs(value));
    table << "  eps-optimization: eps* = " << format_real(opt->eps)
          << ", value = " << format_real(opt->value) << ", relative gap = " << short_real(gap)
          << '\n';
    if (opt->value < value * (1.0 - 1e-9))
      table << "  optimizer found a strictly better eps (expected when a > 0)\n";
  }
  res.table = table.str();

  res.csv.push_back(
      "variant,n,delta,a,k,b,r0,nu,delta1,eps,eps1,value,branch,opt_eps,opt_value");
  std::ostringstream row;
  row << variant << ',' << (n ? std::to_string(*n) : "") << ',' << cell(delta) << ','
      << cell(a) << ',' << cell(k) << ',' << cell(b) << ',' << cell(r0) << ',' << cell(nu)
      << ',' << cell(delta1) << ',' << cell(eps) << ',' << cell(eps1) << ','
      << format_real(value) << ',' << branch << ','
      << (opt ? format_real(opt->eps) : std::string{}) << ','
      << (opt ? format_real(opt->value) : std::string{});
  res.csv.push_back(row.str());
  return res;
}

RunResult run_criterion(const Config& cfg, const RunOptions& opts) {
  const CriterionOutcome o = criterion_core(cfg, opts);
  RunResult res;
  res.exit_code = o.verdict.falsification_alarm ? 4 : 0;

  std::ostringstream table;
  table << "criterion " << criterion_variant_name(o.params.variant)
        << " profile=" << o.profile << " n=" << o.params.n << '\n';
  table << "  constant C = " << format_real(o.verdict.constant_used) << '\n';
  table << "  min margin = " << short_real(o.verdict.min_margin) << " on ["
        << short_real(o.verdict.window_lo) << ", " << short_real(o.verdict.window_hi)
        << "]\n";
  table << "  criterion_met = " << (o.verdict.criterion_met ? "true" : "false")
        << ", predicted_compact = " << (o.verdict.predicted_compact ? "true" : "false")
        << '\n';
  if (o.verdict.known_compact)
    table << "  catalog ground truth: known_compact = "
          << (*o.verdict.known_compact ? "true" : "false") << '\n';
  if (o.verdict.cross_check_conjugate_time)
    table << "  cross-check conjugate time = "
          << format_real(*o.verdict.cross_check_conjugate_time) << '\n';
  else
    table << "  cross-check: no conjugate point in the tested window\n";
  if (o.verdict.falsification_alarm) table << "  FALSIFICATION ALARM\n";
  table << "  notes: " << o.verdict.notes << '\n';
  res.table = table.str();

  res.csv.push_back(criterion_csv_header());
  res.csv.push_back(criterion_csv_row(o));
  return res;
}

RunResult run_ambrose(const Config& cfg, const RunOptions&) {
  const RadialManifold m = build_manifold(cfg);
  const double C = cfg.require_double("C");
  const double alpha = cfg.require_double("alpha");
  const double t_probe = cfg.get_double("t_probe", 12.0);
  cfg.reject_unknown_keys();

  const AmbroseReport rep = ambrose_diagnosis(m, C, alpha, t_probe);

  RunResult res;
  std::ostringstream table;
  table << "ambrose profile=" << m.profile.name << " n=" << m.n << " weight=" << m.weight.name
        << '\n';
  table << "  f' condition slack = " << short_real(rep.fprime_slack)
        << (rep.fprime_ok ? "  (holds)" : "  (violated)") << '\n';
  for (const auto& [T, I] : rep.integral_probes)
    table << "  integral up to T=" << short_real(T) << " : " << format_real(I) << '\n';
  table << "  trend: " << trend_name(rep.trend) << '\n';
  if (rep.conjugate_time)
    table << "  conjugate point at t = " << format_real(*rep.conjugate_time)
          << "  (compactness signature)\n";
  else
    table << "  no conjugate point within the search window\n";
  table << "  notes: " << rep.notes << '\n';
  res.table = table.str();

  res.csv.push_back(
      "profile,n,weight,C,alpha,t_probe,fprime_slack,fprime_ok,T1,I1,T2,I2,T3,I3,trend,"
      "conjugate_time,compact_signature,notes");
  std::ostringstream row;
  row << m.profile.name << ',' << m.n << ',' << m.weight.name << ',' << format_real(C)
      << ',' << format_real(alpha) << ',' << format_real(t_probe) << ','
      << format_real(rep.fprime_slack) << ',' << (rep.fprime_ok ? "true" : "false");
  for (const auto& [T, I] : rep.integral_probes)
    row << ',' << format_real(T) << ',' << format_real(I);
  row << ',' << trend_name(rep.trend) << ',' << cell(rep.conjugate_time) << ','
      << (rep.compact_signature ? "true" : "false") << ',' << csv_quote(rep.notes);
  res.csv.push_back(row.str());
  return res;
}

RunResult run_sweep(const Config& cfg, const RunOptions& opts) {
  const std::string workflow = cfg.require_string("workflow");
  if (workflow != "compare" && workflow != "criterion")
    throw ConfigError("sweep workflow must be 'compare' or 'criterion'");

  static const std::vector<std::string> sweepable = {
      "delta", "a", "k", "H", "b", "r0", "eps", "eps1", "beta",
      "weight_delta", "weight_c", "n", "C", "alpha", "t"};

  struct Axis {
    std::string param;
    std::vector<double> values;
  };
  std::vector<Axis> axes;
  for (const auto& key : cfg.keys_with_prefix("sweep_")) {
    const std::string param = key.substr(6);
    if (std::find(sweepable.begin(), sweepable.end(), param) == sweepable.end())
      throw ConfigError("key '" + key + "': parameter '" + param + "' is not sweepable");
    axes.push_back({param, cfg.require_double_list(key)});
  }
  if (axes.empty())
    throw ConfigError("sweep requires at least one sweep_<param> list (empty grid)");
  // keys_with_prefix returns sorted keys, so axes are in lexicographic
  // parameter order; rows follow the same order with the last axis fastest.

  double total_d = 1.0;
  for (const auto& ax : axes) total_d *= static_cast<double>(ax.values.size());
  if (total_d > 1e6) throw ConfigError("sweep grid exceeds 10^6 points");
  const std::size_t total = static_cast<std::size_t>(total_d);

  std::vector<std::string> rows(total);
  std::vector<int> codes(total, 0);
  std::exception_ptr first_error;
  std::mutex err_mutex;

  auto run_point = [&](std::size_t idx) {
    Config pc = cfg.point_config();
    std::size_t rem = idx;
    for (std::size_t j = axes.size(); j-- > 0;) {
      const std::size_t pick = rem % axes[j].values.size();
      rem /= axes[j].values.size();
      pc.override_value(axes[j].param, format_real(axes[j].values[pick]));
    }
    RunOptions po = opts;
    po.quiet = true;
    if (workflow == "compare") {
      const CompareOutcome o = compare_core(pc, po);
      rows[idx] = compare_summary_row(o);
      codes[idx] = 0;
    } else {
      const CriterionOutcome o = criterion_core(pc, po);
      rows[idx] = criterion_csv_row(o);
      codes[idx] = o.verdict.falsification_alarm ? 4 : 0;
    }
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers =
      total < 16 ? 1u : static_cast<unsigned>(std::min<std::size_t>(std::min<unsigned>(hw, 8u), total));
  auto shard = [&](unsigned w) {
    for (std::size_t i = w; i < total; i += workers) {
      if (first_error) return;
      try {
        run_point(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  if (workers == 1) {
    shard(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(shard, w);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  RunResult res;
  res.csv.push_back(workflow == "compare" ? compare_summary_header()
                                          : criterion_csv_header());
  for (auto& r : rows) res.csv.push_back(std::move(r));
  res.exit_code = *std::max_element(codes.begin(), codes.end());

  std::ostringstream table;
  table << "sweep workflow=" << workflow << " points=" << total << " axes=";
  for (std::size_t j = 0; j < axes.size(); ++j)
    table << (j ? "," : "") << axes[j].param << '(' << axes[j].values.size() << ')';
  table << '\n';
  res.table = table.str();
  return res;
}

void write_csv_atomic(const std::string& path, const std::vector<std::string>& lines) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw ConfigError("cannot open output file " + tmp);
    for (const auto& l : lines) os << l << '\n';
    os.flush();
    if (!os) throw ConfigError("failed while writing " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw ConfigError("cannot move " + tmp + " into place: " + ec.message());
}

}  // namespace myers::cli
