#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gtf::verify {

/// Sampling of the verification sweeps.
struct GridSpec {
  std::vector<double> p_values;
  std::vector<double> q_values;
  std::vector<double> t_values;
  /// Points strictly inside (0, 1), within [0.01, 0.99].
  std::vector<double> x_values;
  /// Relative slack: a record passes when margin >= -margin_tol * max(|lhs|, |rhs|, 1).
  double margin_tol = 1e-9;
};

enum class Suite { Thm1, Thm2, Bounds, Gm, Monotone, PiProp, Convexity, Eigen };

std::string_view name(Suite s);
std::optional<Suite> suite_from_name(std::string_view s);
const std::vector<Suite>& all_suites();

/// The default grid of each suite.
GridSpec default_grid(Suite s);

/// Throws ParameterError when the grid violates GridSpec's or the suite's
/// preconditions (t >= 0 for Thm1, t >= 1 for Thm2, t < 1 for PiProp, ...).
void validate(const GridSpec& grid, Suite s);

/// Named parameters of a record. Unused ones stay empty. Ordering is
/// lexicographic in declaration order with "unset" before any value.
struct Params {
  std::optional<double> p, q, t, r, s, x, m;
  std::optional<int> n;

  auto operator<=>(const Params&) const = default;
};

struct CheckRecord {
  std::string check_id;
  Params params;
  double lhs = 0.0;
  double rhs = 0.0;
  /// Oriented slack: rhs - lhs for "<=" claims, lhs - rhs for ">=" claims.
  double margin = 0.0;
  bool pass = false;
  /// Set when evaluation failed or produced a non-finite value.
  std::string diagnostic;
};

struct Report {
  std::vector<CheckRecord> records;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::pair<Suite, GridSpec>> config;
  std::vector<std::string> notes;
};

/// Serial runs the reference loop; Parallel distributes grid cells with
/// OpenMP. Both produce identical reports.
enum class Execution { Serial, Parallel };

Report check_theorem1(const GridSpec& grid, Execution exec = Execution::Parallel);
Report check_theorem2(const GridSpec& grid, Execution exec = Execution::Parallel);
Report check_bounds_lemma(const GridSpec& grid, Execution exec = Execution::Parallel);
Report check_gm_lemma(const GridSpec& grid, Execution exec = Execution::Parallel);
Report check_monotone(const GridSpec& grid, Execution exec = Execution::Parallel);
Report check_pi_proposition(const GridSpec& grid, Execution exec = Execution::Parallel);
Report check_convexity_lemma(const GridSpec& grid, Execution exec = Execution::Parallel);
/// Modes n = 1, 2 at each p of the grid, with kEigenStep and kEigenSafeBand.
Report check_eigen_residual(const GridSpec& grid, Execution exec = Execution::Parallel);
/// One eigenpair; h in [1e-6, 1e-3], safe_band in (0, 0.5) as a fraction of max |u'|.
Report check_eigen_pair(int n, double p, double h = 1e-4, double safe_band = 0.1);

Report run_suite(Suite s, const GridSpec& grid, Execution exec = Execution::Parallel);

/// Concatenates reports and restores the canonical record order.
Report merge(std::vector<Report> parts);

// Fixed thresholds of the individual suites.
inline constexpr double kEigenStep = 1e-4;
inline constexpr double kEigenResidualTol = 1e-5;
inline constexpr double kEigenBoundaryTol = 1e-7;
inline constexpr double kEigenLambdaTol = 1e-12;
inline constexpr double kEigenSafeBand = 0.1;
inline constexpr double kMonotoneStep = 0.01;
inline constexpr double kConvexityStep = 0.01;

}  // namespace gtf::verify
