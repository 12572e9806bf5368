#include <doctest.h>

#include <cmath>

#include "gtf/errors.hpp"
#include "gtf/ptrig.hpp"

using namespace gtf;

namespace {
const double kPs[] = {1.25, 1.5, 2.0, 3.0, 5.0, 10.0};
}

TEST_CASE("p = 2 forward functions are the classical ones") {
  const PExponent two(2.0);
  for (double x = 0.05; x < 0.96; x += 0.05) {
    CAPTURE(x);
    const double t = x * M_PI / 2;
    CHECK(std::abs(fwd_fn(FnKind::Sin, two, t).value - std::sin(t)) <= 1e-13);
    CHECK(std::abs(fwd_fn(FnKind::Cos, two, t).value - std::cos(t)) <= 1e-13);
    CHECK(std::abs(fwd_fn(FnKind::Tan, two, t).value - std::tan(t)) <= 1e-13 * std::tan(t));
    CHECK(std::abs(fwd_fn(FnKind::Sinh, two, 3 * x).value - std::sinh(3 * x)) <= 1e-13 * std::sinh(3 * x));
    CHECK(std::abs(fwd_fn(FnKind::Tanh, two, 3 * x).value - std::tanh(3 * x)) <= 1e-13);
  }
}

TEST_CASE("arc of fwd is the identity") {
  const FnKind kinds[] = {FnKind::Sin, FnKind::Cos, FnKind::Tan, FnKind::Sinh, FnKind::Tanh};
  for (double p : kPs) {
    for (FnKind k : kinds) {
      for (double x = 0.05; x < 0.96; x += 0.15) {
        CAPTURE(p);
        CAPTURE(name(k));
        CAPTURE(x);
        const PExponent pe(p);
        const Evaluation y = fwd_fn(k, pe, x);
        CHECK(y.method == Method::Inversion);
        // Rounding y to a double moves x by |arc'(y)| ulp(y); near y = 1
        // arccos_p is steep for large p, so that term can dominate.
        const double cond = std::abs(arc_fn_deriv(paired(k), pe, y.value)) * y.value * 2.3e-16;
        CHECK(std::abs(arc_fn(paired(k), pe, y.value).value - x) <= 1e-12 + 4 * cond);
      }
    }
  }
}

TEST_CASE("Pythagorean identities") {
  for (double p : kPs) {
    const PExponent pe(p);
    for (double x : {0.1, 0.5, 0.9}) {
      const double s = fwd_fn(FnKind::Sin, pe, x).value;
      const double c = fwd_fn(FnKind::Cos, pe, x).value;
      CHECK(std::pow(s, p) + std::pow(c, p) == doctest::Approx(1.0).epsilon(1e-12));
      const double t = fwd_fn(FnKind::Tan, pe, x).value;
      CHECK(t == doctest::Approx(s / c).epsilon(1e-11));
    }
  }
}

TEST_CASE("derivatives against central differences") {
  const double h = 1e-6;
  const FnKind kinds[] = {FnKind::Sin, FnKind::Cos, FnKind::Tan, FnKind::Sinh, FnKind::Tanh};
  for (double p : {1.5, 3.0}) {
    const PExponent pe(p);
    for (FnKind k : kinds) {
      for (double x : {0.3, 0.7}) {
        const double fd = (fwd_fn(k, pe, x + h).value - fwd_fn(k, pe, x - h).value) / (2 * h);
        CHECK(fwd_fn_deriv(k, pe, x) == doctest::Approx(fd).epsilon(1e-7));
      }
    }
  }
}

TEST_CASE("saturation and large arguments") {
  CHECK(fwd_fn(FnKind::Tanh, PExponent(2.0), 20.0).value == doctest::Approx(1.0).epsilon(1e-16));
  CHECK(fwd_fn(FnKind::Tanh, PExponent(3.0), 1e4).value == 1.0);
  CHECK(fwd_fn(FnKind::Sinh, PExponent(2.0), 30.0).value == doctest::Approx(std::sinh(30.0)).epsilon(1e-12));
  // tan_p is extended up to pi_p / 2, where pi_p/2 - arctan_p y ~ y^{1-p}/(p-1)
  const double half = pi_p(PExponent(3.0)).value / 2;
  const double delta = 1e-4;
  CHECK(fwd_fn(FnKind::Tan, PExponent(3.0), half - delta).value ==
        doctest::Approx(std::pow(2 * delta, -0.5)).epsilon(1e-3));
}

TEST_CASE("domains") {
  const PExponent p(3.0);
  const double half = pi_p(p).value / 2;
  CHECK(fwd_fn(FnKind::Sin, p, 0.0).value == 0.0);
  CHECK(fwd_fn(FnKind::Cos, p, 0.0).value == 1.0);
  CHECK_THROWS_AS(fwd_fn(FnKind::Sin, p, half), DomainError);
  CHECK_THROWS_AS(fwd_fn(FnKind::Tan, p, half + 0.1), DomainError);
  CHECK_THROWS_AS(fwd_fn(FnKind::Sinh, p, -1.0), DomainError);
  CHECK_THROWS_AS(fwd_fn(FnKind::ArcSin, p, 0.5), ParameterError);
  CHECK_THROWS_AS(fwd_fn(FnKind::Sinh, p, 1e6), RangeError);
}

TEST_CASE("extended sin_p") {
  const PExponent p(3.0);
  const double pi = pi_p(p).value;
  for (double t : {0.2, 0.9, 1.3}) {
    CHECK(sin_p_extended(p, pi - t) == doctest::Approx(sin_p_extended(p, t)).epsilon(1e-13));
    CHECK(sin_p_extended(p, -t) == doctest::Approx(-sin_p_extended(p, t)).epsilon(1e-13));
    CHECK(sin_p_extended(p, t + 2 * pi) == doctest::Approx(sin_p_extended(p, t)).epsilon(1e-12));
  }
  CHECK(sin_p_extended(p, pi / 2) == 1.0);
  CHECK(std::abs(sin_p_extended(p, pi)) <= 1e-15);
  const double h = 1e-6;
  for (double t : {0.4, 2.0, 3.5, 5.0}) {
    const double fd = (sin_p_extended(p, t + h) - sin_p_extended(p, t - h)) / (2 * h);
    CHECK(cos_p_extended(p, t) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("eigenpairs") {
  const EigenPair e = eigenpair(1, PExponent(2.0));
  CHECK(e.lambda == doctest::Approx(M_PI * M_PI).epsilon(1e-15));
  for (double t : {0.1, 0.5, 0.77}) {
    CHECK(e.u(t) == doctest::Approx(std::sin(M_PI * t)).epsilon(1e-13));
    CHECK(e.du(t) == doctest::Approx(M_PI * std::cos(M_PI * t)).epsilon(1e-12));
  }
  const EigenPair e2 = eigenpair(2, PExponent(3.0));
  const double pi3 = pi_p(PExponent(3.0)).value;
  CHECK(e2.lambda == doctest::Approx(2 * std::pow(2 * pi3, 3.0)).epsilon(1e-14));
  CHECK(std::abs(e2.u(0.5)) <= 1e-14);
  CHECK(e2.u(0.25) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(eigenpair(0, PExponent(2.0)), ParameterError);
}
