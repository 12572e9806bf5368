#pragma once

#include <string_view>

namespace gtf {

enum class Method { Series, Quadrature, ClosedForm, Inversion };

std::string_view to_string(Method m);

/// A computed value together with a claimed absolute error bound.
///
/// Both fields are finite and abs_err is nonnegative; construct through
/// make_evaluation(), which raises RangeError otherwise.
struct Evaluation {
  double value = 0.0;
  double abs_err = 0.0;
  Method method = Method::ClosedForm;
};

Evaluation make_evaluation(double value, double abs_err, Method method);

}  // namespace gtf
