#include <doctest.h>

#include <cmath>

#include "gtf/errors.hpp"
#include "gtf/special.hpp"

using namespace gtf;

TEST_CASE("gamma matches std::tgamma") {
  for (double x = 0.05; x < 30.0; x += 0.137) {
    const double ref = std::tgamma(x);
    CHECK(std::abs(special::gamma(x) - ref) <= special::kGammaRelErr * std::abs(ref));
  }
  for (double x : {-0.5, -1.5, -2.25, -7.9}) {
    const double ref = std::tgamma(x);
    CHECK(std::abs(special::gamma(x) - ref) <= special::kGammaRelErr * std::abs(ref));
  }
}

TEST_CASE("gamma at half integers") {
  const double sqrt_pi = std::sqrt(M_PI);
  CHECK(special::gamma(0.5) == doctest::Approx(sqrt_pi).epsilon(1e-14));
  CHECK(special::gamma(1.5) == doctest::Approx(sqrt_pi / 2).epsilon(1e-14));
  CHECK(special::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-14));
}

TEST_CASE("poles") {
  CHECK_THROWS_AS(special::gamma(0.0), ParameterError);
  CHECK_THROWS_AS(special::gamma(-3.0), ParameterError);
  CHECK(special::rgamma(0.0) == 0.0);
  CHECK(special::rgamma(-2.0) == 0.0);
  CHECK(special::rgamma(4.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(special::is_nonpositive_integer(-4.0));
  CHECK(special::is_nonpositive_integer(1e-13));
  CHECK_FALSE(special::is_nonpositive_integer(-0.5));
  CHECK_FALSE(special::is_nonpositive_integer(1.0));
}
