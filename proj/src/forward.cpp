// Forward p-functions by monotone inversion of the inverse functions, plus
// the periodic continuation of sin_p used by the p-Laplacian eigenfunctions.

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "gtf/detail/arc_kernels.hpp"
#include "gtf/errors.hpp"
#include "gtf/ptrig.hpp"

namespace gtf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSolveTol = 1e-13;
constexpr int kMaxIter = 200;
constexpr double kInnerTol = 1e-16;
// exp() underflows below this.
constexpr double kLogMin = -745.0;

struct Root {
  double x;
  double last_step;
};

/// Newton iteration safeguarded by a bracket: g is monotone on [lo, hi] in
/// the stated direction and the bracket is known analytically to contain the
/// root. An endpoint whose sign is wrong can then only be off by rounding
/// and is returned as the root. Steps that leave the bracket, or do not
/// halve the previous step, are replaced by bisection. Stops when a step is
/// below abs_tol + rel_tol |x|; a bisection exit gets one Newton polish.
template <class G, class D>
Root solve_monotone(G&& g, D&& dg, double lo, double hi, bool increasing, double abs_tol,
                    double rel_tol) {
  const double glo = g(lo);
  const double ghi = g(hi);
  if (std::isnan(glo) || std::isnan(ghi)) throw ConvergenceError("inversion: NaN at the bracket");
  if (glo == 0.0 || (glo > 0.0) == increasing) return {lo, 0.0};
  if (ghi == 0.0 || (ghi < 0.0) == increasing) return {hi, 0.0};
  double x = 0.5 * (lo + hi);
  double dx_old = hi - lo;
  double dx = dx_old;
  for (int it = 0; it < kMaxIter; ++it) {
    const double f = g(x);
    if (f == 0.0) return {x, 0.0};
    if ((f < 0.0) == increasing) {
      lo = x;
    } else {
      hi = x;
    }
    const double d = dg(x);
    const double newton = x - f / d;
    bool bisected = false;
    if (!std::isfinite(newton) || newton <= lo || newton >= hi || std::abs(2.0 * f) > std::abs(dx_old * d)) {
      dx_old = dx;
      dx = 0.5 * (hi - lo);
      x = lo + dx;
      bisected = true;
    } else {
      dx_old = dx;
      dx = f / d;
      x = newton;
    }
    const double tol = abs_tol + rel_tol * std::abs(x);
    if (std::abs(dx) <= tol || hi - lo <= tol) {
      if (bisected) {
        const double fx = g(x);
        const double polished = x - fx / dg(x);
        if (std::isfinite(polished) && polished >= lo && polished <= hi) {
          return {polished, std::abs(polished - x)};
        }
      }
      return {x, std::abs(dx)};
    }
  }
  throw ConvergenceError("inversion: iteration cap reached");
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

[[noreturn]] void domain(FnKind kind, double x, const std::string& what) {
  throw DomainError(std::string(name(kind)) + ": x = " + num(x) + " " + what);
}

double arcsin_of(double p, double y) {
  const auto pp = detail::power_pair(p, y);
  return detail::arcsin_kernel(p, y, pp.xp, pp.cxp, kInnerTol).value;
}

double arccos_of(double p, double u) { return detail::arccos_kernel(p, u, kInnerTol).value; }

/// A forward value together with its Pythagorean partner:
/// cos_p for Sin, sin_p for Cos, 1 - tanh_p^p for Tanh.
struct Forward {
  double y;
  double partner;
  double abs_err;
};

Forward solve_sin(double p, double theta, double half) {
  if (theta == 0.0) return {0.0, 1.0, 0.0};
  // arcsin_p y lies between y and (pi_p/2) y.
  const double lo = theta / half;
  const double hi = std::min(theta, 1.0);
  auto g = [&](double y) { return arcsin_of(p, y) - theta; };
  auto dg = [&](double y) { return std::pow(detail::power_pair(p, y).cxp, -1.0 / p); };
  const Root r = solve_monotone(g, dg, lo, hi, true, 0.0, kSolveTol);
  const double c = std::pow(detail::power_pair(p, r.x).cxp, 1.0 / p);
  return {r.x, c, r.last_step + 4 * kEps * r.x};
}

Forward solve_cos(double p, double theta, double half) {
  if (theta == 0.0) return {1.0, 0.0, 0.0};
  const double ylo = theta / half;
  const double yhi = std::min(theta, 1.0);
  const double lo = std::pow(detail::power_pair(p, yhi).cxp, 1.0 / p);
  const double hi = std::pow(detail::power_pair(p, ylo).cxp, 1.0 / p);
  auto g = [&](double u) { return arccos_of(p, u) - theta; };
  auto dg = [&](double u) {
    if (u == 0.0) return -std::numeric_limits<double>::infinity();
    return -std::pow(u, p - 2.0) * std::pow(detail::power_pair(p, u).cxp, 1.0 / p - 1.0);
  };
  const Root r = solve_monotone(g, dg, lo, hi, false, 1e-300, kSolveTol);
  const double s = std::pow(detail::power_pair(p, r.x).cxp, 1.0 / p);
  return {r.x, s, r.last_step + 4 * kEps * r.x};
}

// Forward functions on [0, inf) are solved in v = ln y.
template <class Arc, class Deriv>
Forward solve_unbounded(double theta, Arc arc, Deriv deriv, const char* label) {
  if (theta == 0.0) return {0.0, 0.0, 0.0};
  auto g = [&](double v) { return arc(std::exp(v)) - theta; };
  auto dg = [&](double v) {
    const double y = std::exp(v);
    return y * deriv(y);
  };
  // The inverse function never exceeds its argument, so y >= theta.
  const double lo = std::log(theta);
  double hi = std::max(lo + 1.0, 1.0);
  while (g(hi) < 0.0) {
    hi = 2.0 * hi;
    if (hi > 709.0) throw RangeError(std::string(label) + ": result overflows");
  }
  const Root r = solve_monotone(g, dg, lo, hi, true, kSolveTol, 0.0);
  const double y = std::exp(r.x);
  return {y, 0.0, y * (r.last_step + 2 * kEps * std::abs(r.x)) + 4 * kEps * y};
}

Forward solve_tanh(double p, double theta) {
  if (theta == 0.0) return {0.0, 1.0, 0.0};
  // Unknown v = ln w with w = 1 - y^p, so saturation y -> 1 keeps precision.
  auto arc = [&](double v) {
    const double w = std::exp(v);
    const double cw = -std::expm1(v);
    const double y = std::pow(cw, 1.0 / p);
    return detail::artanh_kernel(p, y, cw, w, v, kInnerTol).value;
  };
  auto g = [&](double v) { return arc(v) - theta; };
  auto dg = [&](double v) { return -(1.0 / p) * std::pow(-std::expm1(v), 1.0 / p - 1.0); };
  double lo = -1.0;
  while (g(lo) < 0.0) {
    lo *= 2.0;
    if (lo < kLogMin) return {1.0, 0.0, 0.0};
  }
  const Root r = solve_monotone(g, dg, lo, 0.0, false, 0.0, kSolveTol);
  const double w = std::exp(r.x);
  const double y = std::pow(-std::expm1(r.x), 1.0 / p);
  const double dy = y * w / (p * std::max(1.0 - w, kEps)) * r.last_step;
  return {y, w, std::abs(dy) + 4 * kEps * y};
}

Forward forward(FnKind kind, double p, double x) {
  if (std::isnan(x) || x < 0.0) domain(kind, x, "is negative");
  const double half = detail::pi_p_closed(p) / 2;
  switch (kind) {
    case FnKind::Sin:
      if (x >= half) domain(kind, x, "is not below a_p = " + num(half));
      return solve_sin(p, x, half);
    case FnKind::Cos:
      if (x >= half) domain(kind, x, "is not below a_p = " + num(half));
      return solve_cos(p, x, half);
    case FnKind::Tan: {
      if (x >= half) domain(kind, x, "is not below pi_p/2 = " + num(half));
      auto arc = [p](double y) { return detail::arctan_kernel(p, y, kInnerTol).value; };
      auto deriv = [p](double y) { return 1.0 / (1.0 + std::pow(y, p)); };
      Forward f = solve_unbounded(x, arc, deriv, "tan_p");
      f.partner = 1.0 + std::pow(f.y, p);
      return f;
    }
    case FnKind::Sinh: {
      if (!std::isfinite(x)) domain(kind, x, "is not finite");
      auto arc = [p](double y) { return detail::arsinh_kernel(p, y, kInnerTol).value; };
      auto deriv = [p](double y) { return std::pow(1.0 + std::pow(y, p), -1.0 / p); };
      Forward f = solve_unbounded(x, arc, deriv, "sinh_p");
      f.partner = std::pow(1.0 + std::pow(f.y, p), 1.0 / p);
      return f;
    }
    case FnKind::Tanh:
      if (!std::isfinite(x)) domain(kind, x, "is not finite");
      return solve_tanh(p, x);
    default:
      throw ParameterError(std::string(name(kind)) + " is not a forward function");
  }
}

}  // namespace

Evaluation fwd_fn(FnKind kind, PExponent p, double x) {
  const Forward f = forward(kind, p.value(), x);
  return make_evaluation(f.y, f.abs_err, Method::Inversion);
}

double fwd_fn_deriv(FnKind kind, PExponent p, double x) {
  const double pv = p.value();
  const Forward f = forward(kind, pv, x);
  switch (kind) {
    case FnKind::Sin:
      return f.partner;
    case FnKind::Cos:
      // -sin_p^{p-1} cos_p^{2-p}
      if (f.y == 0.0) throw DomainError("cos_p derivative: infinite at cos_p = 0");
      return -std::pow(f.partner, pv - 1.0) * std::pow(f.y, 2.0 - pv);
    case FnKind::Tan:
    case FnKind::Sinh:
    case FnKind::Tanh:
      return f.partner;
    default:
      throw ParameterError(std::string(name(kind)) + " is not a forward function");
  }
}

double sin_p_extended(PExponent p, double theta) {
  if (!std::isfinite(theta)) throw DomainError("sin_p: non-finite argument");
  const double pi = detail::pi_p_closed(p.value());
  const double half = pi / 2;
  double r = std::fmod(theta, 2 * pi);
  if (r < 0.0) r += 2 * pi;
  double sign = 1.0;
  if (r >= pi) {
    r -= pi;
    sign = -1.0;
  }
  if (r > half) r = pi - r;
  if (r >= half) return sign;
  return sign * forward(FnKind::Sin, p.value(), r).y;
}

double cos_p_extended(PExponent p, double theta) {
  if (!std::isfinite(theta)) throw DomainError("cos_p: non-finite argument");
  const double pi = detail::pi_p_closed(p.value());
  const double half = pi / 2;
  double r = std::fmod(theta, 2 * pi);
  if (r < 0.0) r += 2 * pi;
  double sign = 1.0;
  if (r >= pi) {
    r -= pi;
    sign = -1.0;
  }
  if (r > half) {
    r = pi - r;
    sign = -sign;
  }
  if (r >= half) return 0.0;
  return sign * forward(FnKind::Cos, p.value(), r).y;
}

double EigenPair::u(double t) const {
  return sin_p_extended(p, n * pi_p(p).value * t);
}

double EigenPair::du(double t) const {
  const double scale = n * pi_p(p).value;
  return scale * cos_p_extended(p, scale * t);
}

EigenPair eigenpair(int n, PExponent p) {
  if (n < 1) throw ParameterError("eigenpair: mode index must be >= 1");
  const double pv = p.value();
  const double lambda = (pv - 1.0) * std::pow(n * pi_p(p).value, pv);
  return {n, lambda, p};
}

}  // namespace gtf
