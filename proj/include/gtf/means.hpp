#pragma once

namespace gtf::means {

/// Order t of a power mean; finite with |t| <= 100.
class MeanOrder {
 public:
  explicit MeanOrder(double t);
  double value() const { return t_; }

 private:
  double t_;
};

/// M_t(x, y) = ((x^t + y^t)/2)^{1/t}, and sqrt(x y) for t == 0 exactly.
/// Throws DomainError unless x, y > 0.
double power_mean(MeanOrder t, double x, double y);

}  // namespace gtf::means
