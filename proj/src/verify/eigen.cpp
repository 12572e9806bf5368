// Finite-difference residual of the p-Laplacian eigenproblem at
// u(t) = sin_p(n pi_p t), lambda = (p-1)(n pi_p)^p.

#include <array>
#include <cmath>
#include <numbers>

#include "gtf/errors.hpp"
#include "gtf/ptrig.hpp"
#include "sweep.hpp"

namespace gtf::verify {

using detail::Claim;

namespace {

constexpr int kEigenPoints = 200;  // t = k / 200
constexpr std::array<int, 2> kModes = {1, 2};

double phi(double d, double p) { return d == 0.0 ? 0.0 : std::pow(std::abs(d), p - 2.0) * d; }

// The thresholds below are absolute acceptance levels, so no extra slack.
void eigen_records(int n, double p, double h, double safe_band, std::vector<CheckRecord>& out) {
  const EigenPair e = eigenpair(n, PExponent(p));
  const double du_max = n * 2 * std::numbers::pi / (p * std::sin(std::numbers::pi / p));
  Params base;
  base.p = p;
  base.n = n;

  for (int k = 1; k < kEigenPoints; ++k) {
    const double t = static_cast<double>(k) / kEigenPoints;
    if (!(t > h && t < 1.0 - h)) throw DomainError("eigen: t outside (h, 1 - h)");
    if (std::abs(e.du(t)) < safe_band * du_max) continue;
    const double u0 = e.u(t);
    const double up = (e.u(t + h) - u0) / h;
    const double um = (u0 - e.u(t - h)) / h;
    const double res = -(phi(up, p) - phi(um, p)) / h - e.lambda * phi(u0, p);
    Params prm = base;
    prm.x = t;
    out.push_back(detail::claim("eigen.residual", prm, std::abs(res) / e.lambda, kEigenResidualTol,
                                Claim::LessEq, 0.0));
    if (p == 2.0) {
      const double exact = std::sin(n * std::numbers::pi * t);
      out.push_back(detail::claim("eigen.classical", prm, std::abs(u0 - exact), kEigenLambdaTol,
                                  Claim::LessEq, 0.0));
    }
  }
  for (double t : {1e-8, 1.0 - 1e-8}) {
    Params prm = base;
    prm.x = t;
    out.push_back(detail::claim("eigen.boundary", prm, std::abs(e.u(t)), kEigenBoundaryTol,
                                Claim::LessEq, 0.0));
  }
  if (p == 2.0) {
    const double classical = n * n * std::numbers::pi * std::numbers::pi;
    out.push_back(detail::claim("eigen.lambda", base, std::abs(e.lambda - classical) / classical,
                                kEigenLambdaTol, Claim::LessEq, 0.0));
  }
}

}  // namespace

Report check_eigen_pair(int n, double p, double h, double safe_band) {
  if (n < 1) throw ParameterError("eigen: n must be a positive integer");
  if (!(h >= 1e-6 && h <= 1e-3)) throw ParameterError("eigen: h must lie in [1e-6, 1e-3]");
  if (!(safe_band > 0.0 && safe_band < 0.5)) throw ParameterError("eigen: safe_band must lie in (0, 0.5)");
  (void)PExponent(p);
  std::vector<CheckRecord> out;
  eigen_records(n, p, h, safe_band, out);
  GridSpec g;
  g.p_values = {p};
  g.q_values = {p};
  g.t_values = {0.0};
  g.x_values = {0.5};
  return detail::finalize(std::move(out), Suite::Eigen, g);
}

Report check_eigen_residual(const GridSpec& grid, Execution exec) {
  validate(grid, Suite::Eigen);
  std::vector<detail::Cell> cells;
  for (int n : kModes) {
    for (double p : grid.p_values) {
      detail::Cell c;
      c.id = "eigen";
      c.params.p = p;
      c.params.n = n;
      cells.push_back(c);
    }
  }
  auto records = detail::sweep(cells, exec, [](const detail::Cell& c, std::vector<CheckRecord>& out) {
    eigen_records(*c.params.n, *c.params.p, kEigenStep, kEigenSafeBand, out);
  });
  return detail::finalize(std::move(records), Suite::Eigen, grid,
                          {"eigen: residuals are relative to lambda; the band keeps points with "
                           "|u'| >= 0.1 n pi_p."});
}

}  // namespace gtf::verify
