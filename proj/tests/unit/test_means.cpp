#include <doctest.h>

#include <cmath>

#include "gtf/errors.hpp"
#include "gtf/means.hpp"

using gtf::means::MeanOrder;
using gtf::means::power_mean;

TEST_CASE("classical means") {
  CHECK(power_mean(MeanOrder(1), 2, 6) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(power_mean(MeanOrder(0), 2, 8) == 4.0);
  CHECK(power_mean(MeanOrder(-1), 2, 3) == doctest::Approx(2.4).epsilon(1e-15));
  CHECK(power_mean(MeanOrder(2), 3, 4) == doctest::Approx(std::sqrt(12.5)).epsilon(1e-15));
}

TEST_CASE("idempotence is exact") {
  for (double t : {-100.0, -3.0, -0.5, 0.0, 0.5, 1.0, 5.0, 100.0}) {
    for (double x : {0.05, 0.37, 0.95, 3.0}) {
      CAPTURE(t);
      CAPTURE(x);
      CHECK(power_mean(MeanOrder(t), x, x) == x);
    }
  }
}

TEST_CASE("symmetric, between the arguments, increasing in t") {
  const double x = 0.15, y = 0.85;
  double last = 0.0;
  for (double t = -10.0; t <= 10.0; t += 0.5) {
    const double m = power_mean(MeanOrder(t), x, y);
    CHECK(m == power_mean(MeanOrder(t), y, x));
    CHECK(m > x);
    CHECK(m < y);
    CHECK(m > last);
    last = m;
  }
}

TEST_CASE("no overflow at extreme orders") {
  CHECK(power_mean(MeanOrder(100), 1e300, 1e300) == 1e300);
  CHECK(power_mean(MeanOrder(100), 1e300, 5e299) == doctest::Approx(1e300 * std::pow(0.5 * (1 + std::pow(0.5, 100)), 0.01)));
  CHECK(std::isfinite(power_mean(MeanOrder(-100), 1e-300, 2e-300)));
  CHECK(power_mean(MeanOrder(0), 1e-200, 1e-200) == doctest::Approx(1e-200));
}

TEST_CASE("limits of the order") {
  // M_t -> geometric mean as t -> 0
  CHECK(power_mean(MeanOrder(1e-9), 2, 8) == doctest::Approx(4.0).epsilon(1e-8));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(MeanOrder(101), gtf::ParameterError);
  CHECK_THROWS_AS(MeanOrder(std::nan("")), gtf::ParameterError);
  CHECK_THROWS_AS(power_mean(MeanOrder(1), 0.0, 1.0), gtf::DomainError);
  CHECK_THROWS_AS(power_mean(MeanOrder(1), -1.0, 1.0), gtf::DomainError);
  CHECK_THROWS_AS(power_mean(MeanOrder(1), 1.0, INFINITY), gtf::DomainError);
}
