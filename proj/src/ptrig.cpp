#include "gtf/ptrig.hpp"

#include <array>
#include <cstdio>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "gtf/detail/arc_kernels.hpp"
#include "gtf/errors.hpp"
#include "gtf/hypergeom.hpp"

namespace gtf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

constexpr std::array<std::pair<FnKind, std::string_view>, 10> kNames = {{
    {FnKind::ArcSin, "arcsin_p"},
    {FnKind::ArcCos, "arccos_p"},
    {FnKind::ArcTan, "arctan_p"},
    {FnKind::ArSinh, "arsinh_p"},
    {FnKind::ArTanh, "artanh_p"},
    {FnKind::Sin, "sin_p"},
    {FnKind::Cos, "cos_p"},
    {FnKind::Tan, "tan_p"},
    {FnKind::Sinh, "sinh_p"},
    {FnKind::Tanh, "tanh_p"},
}};

constexpr std::array<std::pair<LemmaFamily, std::string_view>, 9> kLemmaNames = {{
    {LemmaFamily::F1, "f1"},
    {LemmaFamily::F2, "f2"},
    {LemmaFamily::F3, "f3"},
    {LemmaFamily::F4, "f4"},
    {LemmaFamily::H1, "h1"},
    {LemmaFamily::H2, "h2"},
    {LemmaFamily::H3, "h3"},
    {LemmaFamily::H4, "h4"},
    {LemmaFamily::H5, "h5"},
}};

void check_tol(double tol) {
  if (!(tol > 0.0 && tol <= 1e-3)) throw ParameterError("tol must lie in (0, 1e-3]");
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

[[noreturn]] void domain(FnKind kind, double x, const char* what) {
  throw DomainError(std::string(name(kind)) + ": x = " + num(x) + " " + what);
}

Evaluation series_eval(const detail::Approx<double>& a) {
  return make_evaluation(a.value, a.abs_err, Method::Series);
}

// arcsin_{p,q} at y given y^q and 1 - y^q.
Evaluation arcsin_pq_core(double p, double q, double y, double yq, double cyq, double tol) {
  const double ip = 1.0 / p;
  const double iq = 1.0 / q;
  if (yq <= hyp::kZSwitch) {
    const Evaluation f = hyp::gauss_2f1({ip, iq, 1.0 + iq, yq}, tol);
    return make_evaluation(y * f.value, y * f.abs_err, Method::Series);
  }
  // int_y^1 (1 - t^q)^{-1/p} dt = (1/q) B_{cyq}(1 - 1/p, 1/q).
  const Evaluation half = pi_pq({PExponent(p), PExponent(q)});
  const double scale = iq * std::pow(cyq, 1.0 - ip) / (1.0 - ip);
  if (cyq == 0.0) return make_evaluation(half.value / 2, half.abs_err / 2, Method::Series);
  const Evaluation f = hyp::gauss_2f1({1.0 - ip, 1.0 - iq, 2.0 - ip, cyq}, tol);
  const double value = half.value / 2 - scale * f.value;
  return make_evaluation(value, half.abs_err / 2 + scale * f.abs_err + 4 * kEps * half.value,
                         Method::Series);
}

}  // namespace

PExponent::PExponent(double p) : p_(p) {
  if (!(p > 1.0 + 1e-9 && p < 1e6)) {
    throw ParameterError("p = " + num(p) + " outside (1 + 1e-9, 1e6)");
  }
}

bool is_inverse(FnKind kind) {
  switch (kind) {
    case FnKind::ArcSin:
    case FnKind::ArcCos:
    case FnKind::ArcTan:
    case FnKind::ArSinh:
    case FnKind::ArTanh:
      return true;
    default:
      return false;
  }
}

FnKind paired(FnKind kind) {
  switch (kind) {
    case FnKind::ArcSin: return FnKind::Sin;
    case FnKind::ArcCos: return FnKind::Cos;
    case FnKind::ArcTan: return FnKind::Tan;
    case FnKind::ArSinh: return FnKind::Sinh;
    case FnKind::ArTanh: return FnKind::Tanh;
    case FnKind::Sin: return FnKind::ArcSin;
    case FnKind::Cos: return FnKind::ArcCos;
    case FnKind::Tan: return FnKind::ArcTan;
    case FnKind::Sinh: return FnKind::ArSinh;
    case FnKind::Tanh: return FnKind::ArTanh;
  }
  return kind;
}

std::string_view name(FnKind kind) {
  for (const auto& [k, n] : kNames) {
    if (k == kind) return n;
  }
  return "?";
}

std::optional<FnKind> fn_kind_from_name(std::string_view s) {
  for (const auto& [k, n] : kNames) {
    if (n == s) return k;
  }
  return std::nullopt;
}

std::string_view name(LemmaFamily family) {
  for (const auto& [f, n] : kLemmaNames) {
    if (f == family) return n;
  }
  return "?";
}

std::optional<LemmaFamily> lemma_family_from_name(std::string_view s) {
  for (const auto& [f, n] : kLemmaNames) {
    if (n == s) return f;
  }
  return std::nullopt;
}

Evaluation pi_p(PExponent p) {
  const double v = detail::pi_p_closed(p.value());
  return make_evaluation(v, 4 * kEps * v, Method::ClosedForm);
}

Evaluation constant(Constant which, PExponent p) {
  const double pv = p.value();
  const double scale = std::pow(2.0, -1.0 / pv);
  switch (which) {
    case Constant::A: {
      const Evaluation pp = pi_p(p);
      return make_evaluation(pp.value / 2, pp.abs_err / 2, Method::ClosedForm);
    }
    case Constant::B: {
      const Evaluation f = hyp::gauss_2f1({1.0 / pv, 1.0 / pv, 1.0 + 1.0 / pv, 0.5}, kDefaultTol);
      return make_evaluation(scale * f.value, scale * f.abs_err + 2 * kEps * scale * f.value, f.method);
    }
    case Constant::C: {
      const Evaluation f = hyp::gauss_2f1({1.0, 1.0 / pv, 1.0 + 1.0 / pv, 0.5}, kDefaultTol);
      return make_evaluation(scale * f.value, scale * f.abs_err + 2 * kEps * scale * f.value, f.method);
    }
  }
  throw ParameterError("unknown constant");
}

Evaluation arc_fn(FnKind kind, PExponent p, double x, double tol) {
  check_tol(tol);
  const double pv = p.value();
  if (std::isnan(x) || x < 0.0) domain(kind, x, "is negative");
  switch (kind) {
    case FnKind::ArcSin: {
      if (x > 1.0) domain(kind, x, "exceeds 1");
      const auto pp = detail::power_pair(pv, x);
      return series_eval(detail::arcsin_kernel(pv, x, pp.xp, pp.cxp, tol));
    }
    case FnKind::ArcCos:
      if (x > 1.0) domain(kind, x, "exceeds 1");
      return series_eval(detail::arccos_kernel(pv, x, tol));
    case FnKind::ArcTan:
      if (!std::isfinite(x)) domain(kind, x, "is not finite");
      return series_eval(detail::arctan_kernel(pv, x, tol));
    case FnKind::ArSinh:
      if (!std::isfinite(x)) domain(kind, x, "is not finite");
      return series_eval(detail::arsinh_kernel(pv, x, tol));
    case FnKind::ArTanh: {
      if (x >= 1.0) domain(kind, x, "is not below 1 (artanh_p diverges there)");
      const auto pp = detail::power_pair(pv, x);
      return series_eval(detail::artanh_kernel(pv, x, pp.xp, pp.cxp, tol));
    }
    default:
      throw ParameterError(std::string(name(kind)) + " is not an inverse function");
  }
}

double arc_fn_deriv(FnKind kind, PExponent p, double x) {
  const double pv = p.value();
  if (std::isnan(x) || x < 0.0) domain(kind, x, "is negative");
  switch (kind) {
    case FnKind::ArcSin: {
      if (x >= 1.0) domain(kind, x, "is at or past the singular endpoint");
      return std::pow(detail::power_pair(pv, x).cxp, -1.0 / pv);
    }
    case FnKind::ArcCos: {
      if (x >= 1.0) domain(kind, x, "is at or past the singular endpoint");
      if (x == 0.0) {
        if (pv < 2.0) domain(kind, x, "gives an infinite derivative for p < 2");
        return pv == 2.0 ? -1.0 : 0.0;
      }
      const auto pp = detail::power_pair(pv, x);
      return -std::pow(x, pv - 2.0) * std::pow(pp.cxp, 1.0 / pv - 1.0);
    }
    case FnKind::ArcTan:
      if (!std::isfinite(x)) domain(kind, x, "is not finite");
      return 1.0 / (1.0 + std::pow(x, pv));
    case FnKind::ArSinh:
      if (!std::isfinite(x)) domain(kind, x, "is not finite");
      return std::pow(1.0 + std::pow(x, pv), -1.0 / pv);
    case FnKind::ArTanh:
      if (x >= 1.0) domain(kind, x, "is at or past the singular endpoint");
      return 1.0 / detail::power_pair(pv, x).cxp;
    default:
      throw ParameterError(std::string(name(kind)) + " is not an inverse function");
  }
}

Evaluation arc_fn_pq(PQKind kind, PQExponents pq, double x, double tol) {
  check_tol(tol);
  const double p = pq.p.value();
  const double q = pq.q.value();
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("two-parameter inverse: x = " + num(x) + " outside [0, 1]");
  }
  if (x == 0.0 && kind != PQKind::ArcCos) return make_evaluation(0.0, 0.0, Method::Series);
  switch (kind) {
    case PQKind::ArcSin: {
      const auto pp = detail::power_pair(q, x);
      return arcsin_pq_core(p, q, x, pp.xp, pp.cxp, tol);
    }
    case PQKind::ArcCos: {
      // y^q = 1 - x^p and 1 - y^q = x^p.
      const auto pp = detail::power_pair(p, x);
      const double y = std::pow(pp.cxp, 1.0 / q);
      return arcsin_pq_core(p, q, y, pp.cxp, pp.xp, tol);
    }
    case PQKind::ArSinh: {
      const Evaluation f = hyp::gauss_2f1({1.0 / p, 1.0 / q, 1.0 + 1.0 / q, -std::pow(x, q)}, tol);
      return make_evaluation(x * f.value, x * f.abs_err, Method::Series);
    }
  }
  throw ParameterError("unknown two-parameter kind");
}

Evaluation arcsin_pq_printed(PQExponents pq, double x, double tol) {
  check_tol(tol);
  const double p = pq.p.value();
  const double q = pq.q.value();
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("arcsin_pq_printed: x outside [0, 1]");
  if (x == 0.0) return make_evaluation(0.0, 0.0, Method::Series);
  const Evaluation f = hyp::gauss_2f1({1.0 / p, 1.0 / q, 1.0 + 1.0 / p, std::pow(x, q)}, tol);
  return make_evaluation(x * f.value, x * f.abs_err, f.method);
}

Evaluation pi_pq(PQExponents pq) {
  const double p = pq.p.value();
  const double q = pq.q.value();
  // arcsin_{p,q}(1) = F(1/p, 1/q; 1+1/q; 1) by Gauss summation.
  const Evaluation f = hyp::gauss_2f1({1.0 / p, 1.0 / q, 1.0 + 1.0 / q, 1.0}, kDefaultTol);
  return make_evaluation(2 * f.value, 2 * f.abs_err, Method::ClosedForm);
}

Evaluation n_pq(PQExponents pq) {
  const double p = pq.p.value();
  const double q = pq.q.value();
  const double scale = std::pow(2.0, -1.0 / p);
  const Evaluation f = hyp::gauss_2f1({1.0, 1.0 / p, 1.0 + 1.0 / q, 0.5}, kDefaultTol);
  return make_evaluation(scale * f.value, scale * f.abs_err + 2 * kEps * scale * f.value, f.method);
}

Evaluation lemma_fn_eval(LemmaFamily family, double m, PExponent p, double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError(std::string(name(family)) + ": x = " + num(x) + " outside (0, 1)");
  }
  const bool f_family = family <= LemmaFamily::F4;
  if (!std::isfinite(m) || (f_family && m < -1.0) || (!f_family && m < 1.0)) {
    throw DomainError(std::string(name(family)) + ": m = " + num(m) + " below the family's bound");
  }
  FnKind kind = FnKind::ArcSin;
  switch (family) {
    case LemmaFamily::F1: kind = FnKind::ArcSin; break;
    case LemmaFamily::F2: kind = FnKind::ArTanh; break;
    case LemmaFamily::F3: kind = FnKind::ArcTan; break;
    case LemmaFamily::F4: kind = FnKind::ArSinh; break;
    case LemmaFamily::H1: kind = FnKind::Sin; break;
    case LemmaFamily::H2: kind = FnKind::Tanh; break;
    case LemmaFamily::H3: kind = FnKind::Cos; break;
    case LemmaFamily::H4: kind = FnKind::Tan; break;
    case LemmaFamily::H5: kind = FnKind::Sinh; break;
  }
  const double exponent = f_family ? m : m - 1.0;
  const Evaluation g = f_family ? arc_fn(kind, p, x) : fwd_fn(kind, p, x);
  const double dg = f_family ? arc_fn_deriv(kind, p, x) : fwd_fn_deriv(kind, p, x);
  const double ratio = g.value / x;
  const double value = (exponent == 0.0 ? 1.0 : std::pow(ratio, exponent)) * dg;
  const double rel = g.value == 0.0 ? 0.0 : g.abs_err / std::abs(g.value);
  const double err = (std::abs(exponent) + p.value() + 1.0) * rel * std::abs(value) + 8 * kEps * std::abs(value);
  return make_evaluation(value, err, f_family ? Method::Series : Method::Inversion);
}

double lemma_fn(LemmaFamily family, double m, PExponent p, double x) {
  return lemma_fn_eval(family, m, p, x).value;
}

double pi_lemma_fn(double s, PExponent p) {
  const double pv = p.value();
  const double pi = std::numbers::pi;
  const double arg = pi / pv;
  const double csc = 1.0 / std::sin(arg);
  const double cot = std::cos(arg) * csc;
  return std::pow(pi_p(p).value / pv, -s) * (pv - pi * cot) * csc / (pv * pv * pv);
}

}  // namespace gtf
