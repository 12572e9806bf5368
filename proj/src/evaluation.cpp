#include "gtf/evaluation.hpp"

#include <cmath>
#include <string>

#include "gtf/errors.hpp"

namespace gtf {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Series: return "series";
    case Method::Quadrature: return "quadrature";
    case Method::ClosedForm: return "closed-form";
    case Method::Inversion: return "inversion";
  }
  return "?";
}

Evaluation make_evaluation(double value, double abs_err, Method method) {
  if (!std::isfinite(value)) {
    throw RangeError("non-finite result (" + std::string(to_string(method)) + ")");
  }
  if (!std::isfinite(abs_err) || abs_err < 0.0) {
    throw RangeError("non-finite error estimate (" + std::string(to_string(method)) + ")");
  }
  return {value, abs_err, method};
}

}  // namespace gtf
