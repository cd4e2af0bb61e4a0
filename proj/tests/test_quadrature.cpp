#include "doctest.h"

#include <cmath>
#include <numbers>

#include "mqlandau/errors.hpp"
#include "mqlandau/quadrature.hpp"

using namespace mqlandau;
using namespace mqlandau::quadrature;

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  for (int order : {1, 2, 5, 16, 31}) {
    const auto rule = gauss_legendre(order);
    double weight_sum = 0.0;
    for (double w : rule.weights) {
      weight_sum += w;
    }
    CHECK(weight_sum == doctest::Approx(2.0).epsilon(1e-14));
    for (int degree = 0; degree <= 2 * order - 1; ++degree) {
      const double exact = degree % 2 ? 0.0 : 2.0 / (degree + 1);
      const double got = integrate_composite([degree](double x) { return std::pow(x, degree); },
                                             -1.0, 1.0, 1, rule);
      CHECK(got == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
    }
  }
  CHECK_THROWS_AS((void)gauss_legendre(0), DomainError);
}

TEST_CASE("adaptive integration of an exponential weight") {
  // int_0^60 r^3 e^{-r} dr = 3! up to a tail below 1e-20.
  const auto res =
      integrate_adaptive([](double r) { return r * r * r * std::exp(-r); }, 0.0, 60.0);
  CHECK(res.value == doctest::Approx(6.0).epsilon(1e-12));
  const auto smooth = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
  CHECK(smooth.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("adaptive integration reports non-convergence") {
  CHECK_THROWS_AS((void)integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                                           1e-14, 2, 8),
                  QuadratureError);
}
