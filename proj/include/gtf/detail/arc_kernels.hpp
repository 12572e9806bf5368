#pragma once

// Hypergeometric evaluation of the inverse p-functions, templated on the
// floating type. Every kernel keeps its series argument at or below 1/2;
// arguments past that are routed through a complementary form whose series
// runs in 1 - x^p, which callers supply directly to avoid cancellation.

#include <cmath>
#include <limits>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/expm1.hpp>
#include <boost/math/special_functions/log1p.hpp>

#include "gtf/detail/series.hpp"

namespace gtf::detail {

template <class Real>
struct Approx {
  Real value;
  Real abs_err;
};

template <class Real>
Real pi_p_closed(const Real& p) {
  using std::sin;
  const Real pi = boost::math::constants::pi<Real>();
  return 2 * pi / (p * sin(pi / p));
}

/// x^p and 1 - x^p for x in [0, 1].
template <class Real>
struct PowerPair {
  Real xp;
  Real cxp;
};

template <class Real>
PowerPair<Real> power_pair(const Real& p, const Real& x) {
  using std::log;
  using std::pow;
  if (x == 0) return {Real(0), Real(1)};
  return {pow(x, p), -boost::math::expm1(p * log(x))};
}

/// arcsin_p(x) from x, xp = x^p and cxp = 1 - x^p.
///
/// Above xp = 1/2 the integral is split at 1:
///   arcsin_p x = pi_p/2 - cxp^{(p-1)/p}/(p-1) F(1-1/p, 1-1/p; 2-1/p; cxp).
template <class Real>
Approx<Real> arcsin_kernel(const Real& p, const Real& x, const Real& xp, const Real& cxp,
                           const Real& tol) {
  using std::pow;
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real ip = 1 / p;
  if (xp <= Real(0.5)) {
    const auto s = sum_2f1<Real>(ip, ip, 1 + ip, xp, tol);
    return {x * s.value, x * s.abs_err};
  }
  const Real half_pi_p = pi_p_closed(p) / 2;
  const Real scale = pow(cxp, 1 - ip) / (p - 1);
  const auto s = sum_2f1<Real>(1 - ip, 1 - ip, 2 - ip, cxp, tol);
  const Real tail = scale * s.value;
  return {half_pi_p - tail, scale * s.abs_err + 4 * eps * half_pi_p};
}

/// artanh_p(x) = x F(1, 1/p; 1+1/p; x^p); above xp = 1/2 the logarithmic
/// connection formula in cxp = 1 - x^p is used (its Gamma prefactor is 1/p).
template <class Real>
Approx<Real> artanh_kernel(const Real& p, const Real& x, const Real& xp, const Real& cxp,
                           const Real& log_cxp, const Real& tol) {
  const Real ip = 1 / p;
  if (xp <= Real(0.5)) {
    const auto s = sum_2f1<Real>(Real(1), ip, 1 + ip, xp, tol);
    return {x * s.value, x * s.abs_err};
  }
  const auto s = sum_2f1_log_case<Real>(Real(1), ip, cxp, log_cxp, tol);
  return {x * ip * s.value, x * ip * s.abs_err};
}

template <class Real>
Approx<Real> artanh_kernel(const Real& p, const Real& x, const Real& xp, const Real& cxp,
                           const Real& tol) {
  using std::log;
  return artanh_kernel(p, x, xp, cxp, log(cxp), tol);
}

/// Quantities of the map x -> x^p/(1+x^p) used by arctan_p and arsinh_p.
template <class Real>
struct Bounded {
  Real u;      // (x^p/(1+x^p))^{1/p}
  Real w;      // x^p/(1+x^p)
  Real cw;     // 1/(1+x^p)
  Real log_cw;
};

template <class Real>
Bounded<Real> bounded_arg(const Real& p, const Real& x) {
  using std::exp;
  using std::log;
  using std::pow;
  if (x <= 1) {
    const Real xp = pow(x, p);
    const Real cw = 1 / (1 + xp);
    return {x * pow(cw, 1 / p), xp * cw, cw, -boost::math::log1p(xp)};
  }
  // x > 1: work in logs so that x^p may overflow harmlessly.
  const Real lx = p * log(x);
  const Real log_w = -boost::math::log1p(exp(-lx));
  const Real log_cw = log_w - lx;
  return {exp(log_w / p), exp(log_w), exp(log_cw), log_cw};
}

/// arctan_p(x): x F(1, 1/p; 1+1/p; -x^p) for x <= 1 (summed after the Pfaff
/// transformation, argument x^p/(1+x^p) <= 1/2), and the bounded form
/// u F(1/p, 1/p; 1+1/p; u^p) = arcsin_p(u) for x > 1.
template <class Real>
Approx<Real> arctan_kernel(const Real& p, const Real& x, const Real& tol) {
  if (x == 0) return {Real(0), Real(0)};
  const auto bd = bounded_arg(p, x);
  if (x <= 1) {
    const auto s = sum_2f1<Real>(Real(1), Real(1), 1 + 1 / p, bd.w, tol);
    const Real pre = x * bd.cw;
    return {pre * s.value, pre * s.abs_err};
  }
  return arcsin_kernel(p, bd.u, bd.w, bd.cw, tol);
}

/// arsinh_p(x): x F(1/p, 1/p; 1+1/p; -x^p) for x <= 1 (Pfaff-transformed), and
/// the bounded form u F(1, 1/p; 1+1/p; u^p) = artanh_p(u) for x > 1.
template <class Real>
Approx<Real> arsinh_kernel(const Real& p, const Real& x, const Real& tol) {
  using std::pow;
  if (x == 0) return {Real(0), Real(0)};
  const auto bd = bounded_arg(p, x);
  if (x <= 1) {
    const Real ip = 1 / p;
    const auto s = sum_2f1<Real>(ip, Real(1), 1 + ip, bd.w, tol);
    return {bd.u * s.value, bd.u * s.abs_err};
  }
  return artanh_kernel(p, bd.u, bd.w, bd.cw, bd.log_cw, tol);
}

/// arccos_p(x) = arcsin_p((1 - x^p)^{1/p}), with the roles of x^p and 1 - x^p
/// swapped so neither is formed by subtraction.
template <class Real>
Approx<Real> arccos_kernel(const Real& p, const Real& x, const Real& tol) {
  using std::pow;
  const auto pp = power_pair(p, x);
  const Real y = pow(pp.cxp, 1 / p);
  return arcsin_kernel(p, y, pp.cxp, pp.xp, tol);
}

}  // namespace gtf::detail
