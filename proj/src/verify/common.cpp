#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include "gtf/errors.hpp"
#include "gtf/means.hpp"
#include "gtf/ptrig.hpp"
#include "sweep.hpp"

namespace gtf::verify {

namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 8> kSuiteNames = {{
    {Suite::Thm1, "thm1"},
    {Suite::Thm2, "thm2"},
    {Suite::Bounds, "bounds"},
    {Suite::Gm, "gm"},
    {Suite::Monotone, "monotone"},
    {Suite::PiProp, "pi-prop"},
    {Suite::Convexity, "convexity"},
    {Suite::Eigen, "eigen"},
}};

const std::vector<double> kDefaultP = {1.25, 1.5, 2.0, 3.0, 5.0, 10.0};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

}  // namespace

std::string_view name(Suite s) {
  for (const auto& [k, n] : kSuiteNames) {
    if (k == s) return n;
  }
  return "?";
}

std::optional<Suite> suite_from_name(std::string_view s) {
  for (const auto& [k, n] : kSuiteNames) {
    if (n == s) return k;
  }
  return std::nullopt;
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = {Suite::Thm1,   Suite::Thm2,     Suite::Bounds,
                                            Suite::Gm,     Suite::Monotone, Suite::PiProp,
                                            Suite::Convexity, Suite::Eigen};
  return suites;
}

GridSpec default_grid(Suite s) {
  GridSpec g;
  g.p_values = kDefaultP;
  g.q_values = kDefaultP;
  g.t_values = {0.0, 0.5, 1.0, 2.0, 5.0};
  g.x_values = detail::uniform_points(0.05, 0.95, 0.05);
  g.margin_tol = 1e-9;
  switch (s) {
    case Suite::Thm2:
      g.t_values = {1.0, 2.0, 5.0};
      break;
    case Suite::PiProp:
      g.t_values = {-1.0, 0.0, 0.5};
      break;
    case Suite::Monotone:
    case Suite::Convexity:
      g.margin_tol = 1e-10;
      break;
    case Suite::Eigen:
      g.p_values = {1.5, 2.0, 3.0};
      break;
    default:
      break;
  }
  return g;
}

void validate(const GridSpec& g, Suite s) {
  const std::string tag = std::string(name(s)) + ": ";
  require(!g.p_values.empty() && !g.q_values.empty() && !g.t_values.empty() && !g.x_values.empty(),
          tag + "grid lists must be nonempty");
  require(g.margin_tol > 0.0 && std::isfinite(g.margin_tol), tag + "margin_tol must be positive");
  for (double p : g.p_values) (void)PExponent(p);
  for (double q : g.q_values) (void)PExponent(q);
  for (double t : g.t_values) (void)means::MeanOrder(t);
  for (double x : g.x_values) {
    require(x >= 0.01 && x <= 0.99, tag + "x values must lie in [0.01, 0.99]");
  }
  for (double t : g.t_values) {
    if (s == Suite::Thm1) require(t >= 0.0, tag + "requires t >= 0, got " + num(t));
    if (s == Suite::Thm2) require(t >= 1.0, tag + "requires t >= 1, got " + num(t));
    if (s == Suite::PiProp) require(t < 1.0, tag + "requires t < 1, got " + num(t));
  }
}

Report run_suite(Suite s, const GridSpec& grid, Execution exec) {
  switch (s) {
    case Suite::Thm1: return check_theorem1(grid, exec);
    case Suite::Thm2: return check_theorem2(grid, exec);
    case Suite::Bounds: return check_bounds_lemma(grid, exec);
    case Suite::Gm: return check_gm_lemma(grid, exec);
    case Suite::Monotone: return check_monotone(grid, exec);
    case Suite::PiProp: return check_pi_proposition(grid, exec);
    case Suite::Convexity: return check_convexity_lemma(grid, exec);
    case Suite::Eigen: return check_eigen_residual(grid, exec);
  }
  throw ParameterError("unknown suite");
}

namespace {

bool record_less(const CheckRecord& a, const CheckRecord& b) {
  if (a.check_id != b.check_id) return a.check_id < b.check_id;
  return a.params < b.params;
}

void count(Report& r) {
  r.total = r.records.size();
  r.passed = static_cast<std::size_t>(
      std::count_if(r.records.begin(), r.records.end(), [](const CheckRecord& c) { return c.pass; }));
  r.failed = r.total - r.passed;
}

}  // namespace

Report merge(std::vector<Report> parts) {
  Report out;
  for (auto& part : parts) {
    for (auto& rec : part.records) out.records.push_back(std::move(rec));
    for (auto& cfg : part.config) out.config.push_back(std::move(cfg));
    for (auto& note : part.notes) out.notes.push_back(std::move(note));
  }
  std::stable_sort(out.records.begin(), out.records.end(), record_less);
  count(out);
  return out;
}

namespace detail {

CheckRecord claim_with_margin(std::string id, const Params& params, double lhs, double rhs,
                              double margin, double tol) {
  CheckRecord rec;
  rec.check_id = std::move(id);
  rec.params = params;
  rec.lhs = lhs;
  rec.rhs = rhs;
  rec.margin = margin;
  if (!std::isfinite(lhs) || !std::isfinite(rhs) || !std::isfinite(margin)) {
    rec.pass = false;
    rec.diagnostic = "non-finite";
    return rec;
  }
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
  rec.pass = margin >= -tol * scale;
  return rec;
}

CheckRecord claim(std::string id, const Params& params, double lhs, double rhs, Claim c, double tol) {
  const double margin = c == Claim::LessEq ? rhs - lhs : lhs - rhs;
  return claim_with_margin(std::move(id), params, lhs, rhs, margin, tol);
}

CheckRecord failure(std::string id, const Params& params, std::string diagnostic) {
  CheckRecord rec;
  rec.check_id = std::move(id);
  rec.params = params;
  rec.lhs = std::nan("");
  rec.rhs = std::nan("");
  rec.margin = std::nan("");
  rec.pass = false;
  rec.diagnostic = std::move(diagnostic);
  return rec;
}

Report finalize(std::vector<CheckRecord> records, Suite suite, const GridSpec& grid,
                std::vector<std::string> notes) {
  Report r;
  r.records = std::move(records);
  std::stable_sort(r.records.begin(), r.records.end(), record_less);
  r.config.emplace_back(suite, grid);
  r.notes = std::move(notes);
  count(r);
  return r;
}

std::vector<double> uniform_points(double a, double b, double step) {
  std::vector<double> out;
  const auto n = static_cast<long>(std::floor((b - a) / step + 1e-9));
  for (long i = 0; i <= n; ++i) {
    out.push_back(std::round((a + static_cast<double>(i) * step) * 1e12) / 1e12);
  }
  return out;
}

}  // namespace detail

}  // namespace gtf::verify
