#pragma once

#include <functional>

#include "gtf/evaluation.hpp"
#include "gtf/ptrig.hpp"

namespace gtf::quad {

/// Work cap of the adaptive integrator.
inline constexpr std::size_t kMaxIntervals = 100'000;

/// Adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
///
/// The interval with the largest |K15 - G7| is bisected until the summed
/// estimates fall below tol; that sum (plus a rounding allowance) is
/// reported as abs_err. Throws ConvergenceError past kMaxIntervals and
/// DomainError if f returns a non-finite value at a node.
Evaluation integrate(const std::function<double(double)>& f, double a, double b, double tol);

/// Which defining integrand to integrate from 0 to `upper`.
///
///   ArcSin  (1 - t^q)^{-1/p}   upper in [0, 1]
///   ArcCos  ArcSin kernel up to (1 - x^p)^{1/q}, x = upper in [0, 1]
///   ArcTan  (1 + t^p)^{-1}     upper >= 0
///   ArSinh  (1 + t^q)^{-1/p}   upper >= 0
///   ArTanh  (1 - t^p)^{-1}     upper in [0, 1)
///
/// q equals p for the one-parameter functions.
struct IntegralSpec {
  FnKind kind = FnKind::ArcSin;
  double p = 2.0;
  double q = 2.0;
  double upper = 0.0;
};

/// Quadrature of the defining integral. The (1 - t^q)^{-1/p} kernel is
/// integrated in u with t = 1 - u^{p/(p-1)} above t = 1/2, which removes the
/// endpoint singularity at t = 1.
Evaluation arc_integral(const IntegralSpec& spec, double tol);

}  // namespace gtf::quad
