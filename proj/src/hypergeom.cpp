#include "gtf/hypergeom.hpp"

#include <cmath>
#include <string>

#include "gtf/detail/series.hpp"
#include "gtf/errors.hpp"
#include "gtf/special.hpp"

namespace gtf::hyp {

namespace {

void validate(const HyperParams& hp, double tol) {
  if (!(tol > 0.0 && tol <= 1e-3)) throw ParameterError("2F1: tol must lie in (0, 1e-3]");
  if (!std::isfinite(hp.a) || !std::isfinite(hp.b) || !std::isfinite(hp.c) || !std::isfinite(hp.z)) {
    throw ParameterError("2F1: non-finite parameter");
  }
  if (special::is_nonpositive_integer(hp.c)) {
    throw ParameterError("2F1: c = " + std::to_string(hp.c) + " is a nonpositive integer");
  }
  if (hp.z > 1.0) throw DomainError("2F1: z > 1 is outside the real branch");
}

Evaluation series(double a, double b, double c, double z, double tol, double scale = 1.0) {
  const auto part = detail::sum_2f1<double>(a, b, c, z, tol);
  return make_evaluation(scale * part.value, std::abs(scale) * part.abs_err, Method::Series);
}

// Gamma(a+b) / (Gamma(a) Gamma(b)) and whether it is exact.
std::pair<double, bool> log_case_prefactor(double a, double b) {
  if (a == 1.0) return {b, true};
  if (b == 1.0) return {a, true};
  return {special::gamma(a + b) * special::rgamma(a) * special::rgamma(b), false};
}

}  // namespace

double pochhammer(double a, std::uint32_t n) {
  double r = 1.0;
  for (std::uint32_t i = 0; i < n; ++i) r *= a + static_cast<double>(i);
  if (!std::isfinite(r)) throw RangeError("pochhammer: overflow");
  return r;
}

Evaluation gauss_2f1_near_one(double a, double b, double c, double w, double tol) {
  validate({a, b, c, 1.0 - w}, tol);
  if (!(w > 0.0 && w < 1.0)) throw DomainError("2F1 near one: w = 1 - z must lie in (0, 1)");
  const double excess = c - a - b;
  const bool polynomial =
      special::is_nonpositive_integer(a, 0.0) || special::is_nonpositive_integer(b, 0.0);
  if (std::abs(excess) < 1e-14 && !polynomial) {
    const auto [pre, exact] = log_case_prefactor(a, b);
    const auto part = detail::sum_2f1_log_case<double>(a, b, w, std::log(w), tol);
    const double value = pre * part.value;
    double err = std::abs(pre) * part.abs_err;
    if (!exact) err += 3.0 * special::kGammaRelErr * std::abs(value);
    return make_evaluation(value, err, Method::Series);
  }
  // No connection formula: sum the slowly converging series as is.
  return series(a, b, c, 1.0 - w, tol);
}

Evaluation gauss_2f1(const HyperParams& hp, double tol) {
  validate(hp, tol);
  const auto [a, b, c, z] = hp;
  if (z == 0.0) return make_evaluation(1.0, 0.0, Method::Series);
  if (z == 1.0) {
    const double excess = c - a - b;
    if (excess <= 0.0) {
      throw DivergenceError("2F1 at z = 1 diverges: c - a - b = " + std::to_string(excess) + " <= 0");
    }
    const double value = special::gamma(c) * special::gamma(excess) * special::rgamma(c - a) *
                         special::rgamma(c - b);
    return make_evaluation(value, 4.0 * special::kGammaRelErr * std::abs(value), Method::ClosedForm);
  }
  if (z > 0.0 && z <= kZSwitch) return series(a, b, c, z, tol);
  if (z > kZSwitch) return gauss_2f1_near_one(a, b, c, 1.0 - z, tol);

  // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)).
  const double pre = std::pow(1.0 - z, -a);
  const double w = z / (z - 1.0);
  Evaluation inner = w <= kZSwitch ? series(a, c - b, c, w, tol)
                                   : gauss_2f1_near_one(a, c - b, c, 1.0 / (1.0 - z), tol);
  return make_evaluation(pre * inner.value, std::abs(pre) * inner.abs_err, inner.method);
}

}  // namespace gtf::hyp
