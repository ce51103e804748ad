#include <cmath>
#include <numbers>

#include "doctest.h"
#include "logriemann/quadrature.hpp"

using namespace lrs;

TEST_CASE("polynomials are integrated exactly") {
  auto r = integrate([](Complex z) { return z * z; }, polyline({0.0, 1.0}));
  CHECK(std::abs(r.value - 1.0 / 3.0) < 1e-15);
  CHECK(r.est_error >= 0.0);
  CHECK(r.evaluations > 0);
}

TEST_CASE("contour integral around the origin") {
  auto r = integrate([](Complex z) { return 1.0 / z; }, Path{PathSegment::arc(0.0, 1.0, 0.0, 2.0 * std::numbers::pi)});
  CHECK(std::abs(r.value - Complex(0.0, 2.0 * std::numbers::pi)) < 1e-12);
}

TEST_CASE("arc and chord agree for an entire integrand") {
  auto f = [](Complex z) { return std::exp(z) * std::sin(z); };
  auto a = integrate(f, Path{PathSegment::arc(0.0, 2.0, 0.3, 2.1)});
  auto b = integrate(f, polyline({std::polar(2.0, 0.3), std::polar(2.0, 2.1)}));
  CHECK(std::abs(a.value - b.value) < 1e-11);
}

TEST_CASE("budget exhaustion is reported") {
  QuadOptions o;
  o.tol = 1e-14;
  o.max_evaluations = 200;
  CHECK_THROWS_AS(integrate([](Complex z) { return std::exp(Complex(0.0, 200.0) * z); }, polyline({0.0, 10.0}), o),
                  SurfaceError);
}

TEST_CASE("non-finite integrand") {
  CHECK_THROWS_AS(integrate([](Complex z) { return 1.0 / (z * 0.0); }, polyline({0.0, 1.0})), SurfaceError);
}
