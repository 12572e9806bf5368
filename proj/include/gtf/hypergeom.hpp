#pragma once

#include <cstdint>

#include "gtf/evaluation.hpp"

namespace gtf::hyp {

/// Parameters of F(a, b; c; z). c must not be 0, -1, -2, ... (within 1e-12),
/// and z <= 1, with z = 1 only when c - a - b > 0.
struct HyperParams {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  double z = 0.0;
};

/// Arguments at or below this value are summed directly.
inline constexpr double kZSwitch = 0.5;

/// Shifted factorial (a, n) = a (a+1) ... (a+n-1), with (a, 0) = 1.
/// Throws RangeError when the product overflows.
double pochhammer(double a, std::uint32_t n);

/// Gaussian hypergeometric function for real z <= 1.
///
/// tol must lie in (0, 1e-3]. Routing: z in [0, 1/2] sums the series; z < 0
/// goes through the Pfaff transformation to z/(z-1); z in (1/2, 1) uses the
/// logarithmic connection formula when c = a + b and otherwise sums directly;
/// z = 1 uses Gauss's summation formula.
Evaluation gauss_2f1(const HyperParams& params, double tol);

/// F(a, b; c; 1 - w) for w in (0, 1/2], taking w directly so that arguments
/// next to z = 1 keep full relative accuracy.
Evaluation gauss_2f1_near_one(double a, double b, double c, double w, double tol);

}  // namespace gtf::hyp
