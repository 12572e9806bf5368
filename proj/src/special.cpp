#include "gtf/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "gtf/errors.hpp"

namespace gtf::special {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos(double x) {
  // Gamma(x) for x >= 1/2.
  x -= 1.0;
  double acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += kLanczos[i] / (x + static_cast<double>(i));
  const double t = x + kLanczosG + 0.5;
  // t^(x+1/2) e^-t split in two halves to postpone overflow.
  const double half = std::pow(t, 0.5 * (x + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * acc;
}

}  // namespace

bool is_nonpositive_integer(double x, double tol) {
  return x <= tol && std::abs(x - std::round(x)) <= tol;
}

double gamma(double x) {
  if (is_nonpositive_integer(x, 0.0)) throw ParameterError("gamma: pole at nonpositive integer");
  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos(1.0 - x));
  }
  return lanczos(x);
}

double rgamma(double x) {
  if (is_nonpositive_integer(x, 0.0)) return 0.0;
  return 1.0 / gamma(x);
}

}  // namespace gtf::special
