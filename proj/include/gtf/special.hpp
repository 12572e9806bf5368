#pragma once

namespace gtf::special {

/// Relative accuracy claimed for gamma() on (0, 30); checked against
/// std::tgamma in the unit tests.
inline constexpr double kGammaRelErr = 1e-13;

/// Gamma function via a Lanczos approximation (g = 7, 9 terms), with the
/// reflection formula below 1/2. Throws ParameterError at the poles.
double gamma(double x);

/// 1 / Gamma(x); exactly zero at the poles x = 0, -1, -2, ...
double rgamma(double x);

/// True when x is within `tol` of 0, -1, -2, ...
bool is_nonpositive_integer(double x, double tol = 1e-12);

}  // namespace gtf::special
