#pragma once

#include <optional>
#include <string_view>

#include "gtf/evaluation.hpp"

namespace gtf {

/// The exponent p of the p-functions, restricted to (1 + 1e-9, 1e6).
class PExponent {
 public:
  explicit PExponent(double p);
  double value() const { return p_; }

 private:
  double p_;
};

struct PQExponents {
  PExponent p;
  PExponent q;
};

/// One member of the inverse (Arc*/Ar*) or forward family.
enum class FnKind { ArcSin, ArcCos, ArcTan, ArSinh, ArTanh, Sin, Cos, Tan, Sinh, Tanh };

bool is_inverse(FnKind kind);
/// ArcSin <-> Sin, ArcCos <-> Cos, ...
FnKind paired(FnKind kind);
/// "arcsin_p", "sin_p", ...
std::string_view name(FnKind kind);
std::optional<FnKind> fn_kind_from_name(std::string_view s);

enum class PQKind { ArcSin, ArcCos, ArSinh };

/// Homeomorphism endpoints: a_p = pi_p/2, b_p = arctan_p(1), c_p = arsinh_p(1).
enum class Constant { A, B, C };

/// Series tolerance used when no tolerance is passed.
inline constexpr double kDefaultTol = 1e-15;

/// pi_p = 2 pi / (p sin(pi/p)).
Evaluation pi_p(PExponent p);

/// a_p, b_p = 2^{-1/p} F(1/p, 1/p; 1+1/p; 1/2) and c_p = 2^{-1/p} F(1, 1/p; 1+1/p; 1/2).
///
/// c_p is taken as arsinh_p(1): the form F(1, 1/p; 1+1/p; 1) has c - a - b = 0
/// and diverges.
Evaluation constant(Constant which, PExponent p);

/// Inverse function by its hypergeometric representation.
///
/// Domains: [0, 1] for ArcSin/ArcCos, [0, 1) for ArTanh, [0, inf) for ArcTan
/// and ArSinh. Throws DomainError outside them.
Evaluation arc_fn(FnKind kind, PExponent p, double x, double tol = kDefaultTol);

/// d/dx of the inverse function (its defining integrand; chain rule for ArcCos).
double arc_fn_deriv(FnKind kind, PExponent p, double x);

/// Forward function by bracketed Newton inversion of arc_fn.
///
/// Domains: [0, a_p) for Sin/Cos, [0, pi_p/2) for Tan (extended past b_p),
/// [0, inf) for Sinh and Tanh.
Evaluation fwd_fn(FnKind kind, PExponent p, double x);

/// d/dx of the forward function: cos_p for Sin, 1 + tan_p^p for Tan,
/// 1 - tanh_p^p for Tanh, (1 + sinh_p^p)^{1/p} for Sinh and
/// -sin_p^{p-1} cos_p^{2-p} for Cos.
double fwd_fn_deriv(FnKind kind, PExponent p, double x);

/// Two-parameter inverses on [0, 1]:
///   arcsin_{p,q} x = int_0^x (1 - t^q)^{-1/p} dt = x F(1/p, 1/q; 1+1/q; x^q)
///   arccos_{p,q} x = arcsin_{p,q}((1 - x^p)^{1/q})
///   arsinh_{p,q} x = int_0^x (1 + t^q)^{-1/p} dt = x F(1/p, 1/q; 1+1/q; -x^q)
Evaluation arc_fn_pq(PQKind kind, PQExponents pq, double x, double tol = kDefaultTol);

/// x F(1/p, 1/q; 1+1/p; x^q): the arcsin_{p,q} series with c = 1 + 1/p. It
/// agrees with the integral only when p = q; kept so the discrepancy can be
/// reported.
Evaluation arcsin_pq_printed(PQExponents pq, double x, double tol = kDefaultTol);

/// pi_{p,q} := 2 arcsin_{p,q}(1) = 2 Gamma(1+1/q) Gamma(1-1/p) / Gamma(1+1/q-1/p).
Evaluation pi_pq(PQExponents pq);

/// n_{p,q} = 2^{-1/p} F(1, 1/p; 1+1/q; 1/2), which equals arsinh_{p,q}(1).
Evaluation n_pq(PQExponents pq);

/// sin_p continued to all of R: sin_p(pi_p - x) = sin_p(x) on [pi_p/2, pi_p],
/// odd and 2 pi_p periodic.
double sin_p_extended(PExponent p, double theta);
/// d/dtheta of sin_p_extended.
double cos_p_extended(PExponent p, double theta);

/// Dirichlet eigenpair of the one-dimensional p-Laplacian on (0, 1):
/// u(t) = sin_p(n pi_p t), lambda = (p-1)(n pi_p)^p.
struct EigenPair {
  int n;
  double lambda;
  PExponent p;

  double u(double t) const;
  double du(double t) const;
};

EigenPair eigenpair(int n, PExponent p);

/// Auxiliary functions of the monotonicity lemmas.
///   f1..f4: (g(x)/x)^m g'(x), g = arcsin_p, artanh_p, arctan_p, arsinh_p; m >= -1
///   h1..h5: (G(x)/x)^{m-1} G'(x), G = sin_p, tanh_p, cos_p, tan_p, sinh_p; m >= 1
enum class LemmaFamily { F1, F2, F3, F4, H1, H2, H3, H4, H5 };

std::string_view name(LemmaFamily family);
std::optional<LemmaFamily> lemma_family_from_name(std::string_view s);

/// x in (0, 1); throws DomainError otherwise or when m is below the family's bound.
Evaluation lemma_fn_eval(LemmaFamily family, double m, PExponent p, double x);
double lemma_fn(LemmaFamily family, double m, PExponent p, double x);

/// (pi_p/p)^{-s} (p - pi cot(pi/p)) csc(pi/p) / p^3, claimed decreasing in p.
double pi_lemma_fn(double s, PExponent p);

}  // namespace gtf
