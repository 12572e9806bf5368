#include "gtf/quad_oracle.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "gtf/errors.hpp"

namespace gtf::quad {

namespace {

// Kronrod nodes on [-1, 1] (positive half); odd indices are the Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
  double a;
  double b;
  double value;
  double err;
  double abs_value;
  bool operator<(const Piece& o) const { return err < o.err; }
};

double sample(const std::function<double(double)>& f, double t) {
  const double v = f(t);
  if (!std::isfinite(v)) {
    throw DomainError("integrate: non-finite integrand at t = " + std::to_string(t));
  }
  return v;
}

Piece gk15(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = sample(f, mid);
  double kron = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_k = std::abs(kron);
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = sample(f, mid - dx);
    const double f2 = sample(f, mid + dx);
    kron += kWgk[j] * (f1 + f2);
    abs_k += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  return {a, b, kron * half, std::abs((kron - gauss) * half), abs_k * std::abs(half)};
}

double one_minus_pow(double t, double q) {
  // 1 - t^q for t in [0, 1] without cancellation near t = 1.
  if (t <= 0.0) return 1.0;
  return -std::expm1(q * std::log(t));
}

}  // namespace

Evaluation integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (!(a < b)) throw DomainError("integrate: need a < b");
  if (!(tol > 0.0)) throw ParameterError("integrate: tol must be positive");
  std::priority_queue<Piece> work;
  const Piece first = gk15(f, a, b);
  double total = first.value;
  double err = first.err;
  double abs_total = first.abs_value;
  work.push(first);
  while (err > tol) {
    if (work.size() >= kMaxIntervals) {
      throw ConvergenceError("integrate: subdivision limit reached (err = " + std::to_string(err) + ")");
    }
    const Piece worst = work.top();
    work.pop();
    const double m = 0.5 * (worst.a + worst.b);
    if (!(m > worst.a && m < worst.b)) {
      throw ConvergenceError("integrate: interval can no longer be bisected");
    }
    const Piece left = gk15(f, worst.a, m);
    const Piece right = gk15(f, m, worst.b);
    total += left.value + right.value - worst.value;
    err += left.err + right.err - worst.err;
    abs_total += left.abs_value + right.abs_value - worst.abs_value;
    work.push(left);
    work.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  total = 0.0;
  err = 0.0;
  abs_total = 0.0;
  while (!work.empty()) {
    total += work.top().value;
    err += work.top().err;
    abs_total += work.top().abs_value;
    work.pop();
  }
  const double rounding = 50.0 * std::numeric_limits<double>::epsilon() * abs_total;
  return make_evaluation(total, err + rounding, Method::Quadrature);
}

Evaluation arc_integral(const IntegralSpec& spec, double tol) {
  const double p = spec.p;
  const double q = spec.q;
  double upper = spec.upper;
  if (!(p > 1.0) || !(q > 1.0)) throw ParameterError("arc_integral: p and q must exceed 1");
  if (!(upper >= 0.0) || !std::isfinite(upper)) throw DomainError("arc_integral: bad upper limit");

  FnKind kind = spec.kind;
  if (kind == FnKind::ArcCos) {
    if (upper > 1.0) throw DomainError("arc_integral: ArcCos needs upper in [0, 1]");
    upper = std::pow(one_minus_pow(upper, p), 1.0 / q);
    kind = FnKind::ArcSin;
  }
  if (upper == 0.0) return make_evaluation(0.0, 0.0, Method::Quadrature);

  switch (kind) {
    case FnKind::ArcSin: {
      if (upper > 1.0) throw DomainError("arc_integral: ArcSin needs upper in [0, 1]");
      auto direct = [p, q](double t) { return std::pow(one_minus_pow(t, q), -1.0 / p); };
      if (upper <= 0.5) return integrate(direct, 0.0, upper, tol);
      // t = 1 - u^k, k = p/(p-1): dt = k u^{k-1} du, regular at u = 0.
      const double k = p / (p - 1.0);
      auto substituted = [p, q, k](double u) {
        const double w = std::pow(u, k);
        const double c = -std::expm1(q * std::log1p(-w));
        return k * std::pow(u, k - 1.0) * std::pow(c, -1.0 / p);
      };
      const double u_split = std::pow(0.5, 1.0 / k);
      const double u_upper = std::pow(1.0 - upper, 1.0 / k);
      const Evaluation head = integrate(direct, 0.0, 0.5, tol / 2);
      if (u_upper >= u_split) return head;
      const Evaluation tail = integrate(substituted, u_upper, u_split, tol / 2);
      return make_evaluation(head.value + tail.value, head.abs_err + tail.abs_err, Method::Quadrature);
    }
    case FnKind::ArcTan:
      return integrate([p](double t) { return 1.0 / (1.0 + std::pow(t, p)); }, 0.0, upper, tol);
    case FnKind::ArSinh:
      return integrate([p, q](double t) { return std::pow(1.0 + std::pow(t, q), -1.0 / p); }, 0.0,
                       upper, tol);
    case FnKind::ArTanh:
      if (upper >= 1.0) throw DomainError("arc_integral: ArTanh needs upper in [0, 1)");
      return integrate([p](double t) { return 1.0 / one_minus_pow(t, p); }, 0.0, upper, tol);
    default:
      throw DomainError("arc_integral: kind has no defining integral");
  }
}

}  // namespace gtf::quad
