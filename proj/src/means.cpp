#include "gtf/means.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gtf/errors.hpp"

namespace gtf::means {

MeanOrder::MeanOrder(double t) : t_(t) {
  if (!std::isfinite(t) || std::abs(t) > 100.0) {
    throw ParameterError("mean order t = " + std::to_string(t) + " outside [-100, 100]");
  }
}

double power_mean(MeanOrder order, double x, double y) {
  if (!(x > 0.0 && y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError("power_mean: arguments must be positive and finite");
  }
  const double t = order.value();
  if (t == 0.0) {
    const double prod = x * y;
    if (std::isnormal(prod)) return std::sqrt(prod);
    return std::sqrt(x) * std::sqrt(y);
  }
  // Factor out the argument whose power dominates, so (other/anchor)^t <= 1
  // and nothing overflows for large |t|; M_t(x, x) = x exactly. The rest is
  // carried in logs, which keeps small |t| accurate.
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  const double anchor = t > 0.0 ? hi : lo;
  const double other = t > 0.0 ? lo : hi;
  const double e = std::expm1(t * std::log(other / anchor));
  return anchor * std::exp(std::log1p(0.5 * e) / t);
}

}  // namespace gtf::means
