#pragma once

// Hypergeometric series kernels, templated on the floating type so that the
// same summation code serves the double-precision library and the
// extended-precision margin evaluation in the verifier.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include <boost/math/special_functions/digamma.hpp>

#include "gtf/errors.hpp"

namespace gtf::detail {

inline constexpr std::size_t kSeriesTermCap = 1'000'000;

template <class Real>
struct Partial {
  Real value;
  Real abs_err;
  std::size_t terms;
};

/// Bound on the series tail starting at `omitted`, when later term ratios
/// stay below max(|omitted/last|, limit) (limit being the ratio as n -> inf).
/// Returns a negative value when that bound is not below 1.
template <class Real>
Real geometric_tail(const Real& omitted, const Real& last, const Real& limit) {
  using std::abs;
  const Real rho = std::max(last == 0 ? Real(0) : Real(abs(omitted / last)), Real(abs(limit)));
  if (rho >= 1) return Real(-1);
  return abs(omitted) / (1 - rho);
}

/// Partial sums of sum_n (a,n)(b,n)/(c,n) z^n/n! for |z| < 1.
///
/// Stops once a term satisfies |t| <= tol/2 |S| while term magnitudes are
/// decreasing; abs_err is the first omitted term times 1/(1 - rho), with rho
/// the larger of the last term ratio and |z|, plus a rounding allowance.
template <class Real>
Partial<Real> sum_2f1(const Real& a, const Real& b, const Real& c, const Real& z, const Real& tol) {
  using std::abs;
  const Real eps = std::numeric_limits<Real>::epsilon();
  Real term = 1;
  Real sum = 1;
  Real abs_sum = 1;
  Real prev_mag = 1;
  for (std::size_t n = 0; n < kSeriesTermCap; ++n) {
    const Real k = Real(n);
    const Real next = term * ((a + k) * (b + k) / ((c + k) * (k + 1))) * z;
    if (next == 0) {
      return {sum, 2 * eps * abs_sum, n + 1};
    }
    const Real mag = abs(next);
    sum += next;
    abs_sum += mag;
    if (mag <= tol / 2 * abs(sum) && mag < prev_mag) {
      const Real k1 = k + 1;
      const Real omitted = next * ((a + k1) * (b + k1) / ((c + k1) * (k1 + 1))) * z;
      const Real tail = geometric_tail(omitted, next, z);
      if (tail >= 0) return {sum, tail + 2 * eps * abs_sum, n + 2};
    }
    prev_mag = mag;
    term = next;
  }
  throw ConvergenceError("2F1 series: term cap reached before tolerance");
}

/// The series part of the logarithmic connection formula for c = a + b,
///
///   F(a,b;a+b;z) = Gamma(a+b)/(Gamma(a)Gamma(b))
///       * sum_n (a,n)(b,n)/(n!)^2 [2psi(n+1) - psi(a+n) - psi(b+n) - ln w] w^n,
///
/// with w = 1 - z supplied directly (and log_w = ln w) so that arguments
/// close to z = 1 keep full relative accuracy. The Gamma prefactor is left to
/// the caller. Converges geometrically with ratio w; callers use w <= 1/2.
template <class Real>
Partial<Real> sum_2f1_log_case(const Real& a, const Real& b, const Real& w, const Real& log_w,
                               const Real& tol) {
  using std::abs;
  const Real eps = std::numeric_limits<Real>::epsilon();
  Real psi_n1 = boost::math::digamma(Real(1));
  Real psi_a = boost::math::digamma(a);
  Real psi_b = boost::math::digamma(b);
  Real coef = 1;
  Real term = 2 * psi_n1 - psi_a - psi_b - log_w;
  Real sum = term;
  Real abs_sum = abs(term);
  Real prev_mag = abs(term);
  for (std::size_t n = 0; n < kSeriesTermCap; ++n) {
    const Real k = Real(n);
    coef *= (a + k) * (b + k) / ((k + 1) * (k + 1)) * w;
    psi_n1 += 1 / (k + 1);
    psi_a += 1 / (a + k);
    psi_b += 1 / (b + k);
    const Real next = coef * (2 * psi_n1 - psi_a - psi_b - log_w);
    if (next == 0) {
      return {sum, 2 * eps * abs_sum, n + 2};
    }
    const Real mag = abs(next);
    sum += next;
    abs_sum += mag;
    if (mag <= tol / 2 * abs(sum) && mag < prev_mag) {
      // Bracket tends to -ln w, so the coefficient ratio bounds the tail.
      const Real k1 = k + 1;
      const Real ratio = (a + k1) * (b + k1) / ((k1 + 1) * (k1 + 1)) * w;
      const Real tail = geometric_tail(next * ratio, next, w);
      if (tail >= 0) return {sum, 2 * tail + 2 * eps * abs_sum, n + 2};
    }
    prev_mag = mag;
  }
  throw ConvergenceError("2F1 logarithmic series: term cap reached before tolerance");
}

}  // namespace gtf::detail
