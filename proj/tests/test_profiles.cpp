#include <doctest.h>

#include <cmath>

#include "cgrp/errors.hpp"
#include "cgrp/outtake.hpp"
#include "cgrp/spline.hpp"

using namespace cgrp;

TEST_CASE("periodic spline interpolates and extends by zero") {
  const PeriodicSpline s({0.01, 0.02, 0.03, 0.04, 0.05},
                         {0.0, 20.0, 50.0, 20.0, 0.0});

  CHECK(s(0.01) == 0.0);
  CHECK(s(0.02) == doctest::Approx(20.0).epsilon(1e-13));
  CHECK(s(0.03) == 50.0);
  CHECK(s(0.05) == 0.0);
  // Hand-solved cyclic system for this table: second derivatives
  // (4.5e5, 3e5, -1.05e6, 3e5), giving 5.3125 at the first midpoint.
  CHECK(s(0.015) == doctest::Approx(5.3125).epsilon(1e-12));
  // Symmetric data: flat tangents where the table meets the zero extension.
  CHECK(std::abs(s.deriv(0.01)) < 1e-9);

  CHECK(s(0.0099) == 0.0);
  CHECK(s(0.0501) == 0.0);
  CHECK(s.deriv(0.0099) == 0.0);
  CHECK(s.deriv(0.05) == 0.0);
  CHECK(s(-3.0) == 0.0);
}

TEST_CASE("periodic spline integral is exact") {
  const PeriodicSpline s({0.01, 0.02, 0.03, 0.04, 0.05},
                         {0.0, 20.0, 50.0, 20.0, 0.0});
  // Trapezoid of the table is 0.9 and the curvature corrections cancel by
  // symmetry.
  CHECK(s.integral(0.0, 0.1) == doctest::Approx(0.9).epsilon(1e-13));
  CHECK(s.integral(0.0, 0.01) == 0.0);
  CHECK(s.integral(0.06, 0.2) == 0.0);

  // Additivity over an arbitrary partition.
  const double cuts[] = {0.0, 0.013, 0.021, 0.0299, 0.03, 0.044, 0.05, 0.09};
  double sum = 0.0;
  for (size_t i = 0; i + 1 < std::size(cuts); ++i)
    sum += s.integral(cuts[i], cuts[i + 1]);
  CHECK(sum == doctest::Approx(s.integral(0.0, 0.09)).epsilon(1e-13));

  // Composite Simpson is exact on a cubic piece; compare inside segment 1.
  const double a = 0.021, b = 0.028;
  const int n = 24;
  const double h = (b - a) / n;
  double simpson = s(a) + s(b);
  for (int i = 1; i < n; ++i) simpson += s(a + i * h) * (i % 2 ? 4.0 : 2.0);
  simpson *= h / 3.0;
  CHECK(s.integral(a, b) == doctest::Approx(simpson).epsilon(1e-12));
}

TEST_CASE("seeded density bump integrates to one") {
  const PeriodicSpline s({-15.0, -12.5, -10.0, -7.5, -5.0},
                         {0.0, 0.1, 0.2, 0.1, 0.0});
  CHECK(s.integral(-20.0, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(s(-10.0) == 0.2);
  // Stays nonnegative: convex at the flat ends, positive data inside.
  for (int i = 0; i <= 400; ++i) {
    const double x = -15.0 + 10.0 * i / 400.0;
    CHECK(s(x) >= 0.0);
  }
}

TEST_CASE("spline constructor rejects bad tables") {
  using V = std::vector<double>;
  CHECK_THROWS_AS(PeriodicSpline(V{0, 1, 2}, V{0, 1, 0}), ValidationError);
  CHECK_THROWS_AS(PeriodicSpline(V{0, 1, 1, 2}, V{0, 1, 1, 0}),
                  ValidationError);
  CHECK_THROWS_AS(PeriodicSpline(V{0, 1, 2, 3}, V{0, 1, 1, 5}),
                  ValidationError);
  CHECK_THROWS_AS(PeriodicSpline(V{0, 1, 2, 3}, V{0, 1, 0}), ValidationError);
}

TEST_CASE("piecewise linear outtake reproduces the ramp-hold-ramp table") {
  const auto p = OuttakeProfile::piecewise_linear({0.0, 0.2, 0.3, 0.5},
                                                  {0.0, 0.6, 0.6, 0.0});
  CHECK(p.value(0.1) == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(p.rate_right(0.1) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(p.value(0.25) == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(p.rate_right(0.25) == 0.0);
  CHECK(p.value(0.35) == doctest::Approx(0.45).epsilon(1e-14));
  CHECK(p.rate_right(0.35) == doctest::Approx(-3.0).epsilon(1e-14));
  CHECK(p.value(0.0) == 0.0);
  CHECK(p.rate_right(0.0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(p.value(0.6) == 0.0);
  CHECK(p.rate_right(0.6) == 0.0);
  CHECK(p.rate_right(0.5) == 0.0);

  CHECK(p.integral(0.0, 0.7) == doctest::Approx(0.18).epsilon(1e-14));
  CHECK(p.integral(0.1, 0.25) == doctest::Approx(0.075).epsilon(1e-14));
  CHECK(p.integral(-1.0, 0.0) == 0.0);

  CHECK(p.breakpoints() == std::vector<double>{0.0, 0.2, 0.3, 0.5});
}

TEST_CASE("constant and spline outtake profiles") {
  const auto c = OuttakeProfile::constant(3.0);
  CHECK(c.value(-5.0) == 3.0);
  CHECK(c.value(0.42) == 3.0);
  CHECK(c.rate_right(0.42) == 0.0);
  CHECK(c.integral(0.1, 0.6) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(c.breakpoints().empty());

  const auto s = OuttakeProfile::periodic_spline(
      {0.01, 0.02, 0.03, 0.04, 0.05}, {0.0, 20.0, 50.0, 20.0, 0.0});
  CHECK(s.value(0.03) == 50.0);
  CHECK(s.value(0.015) == doctest::Approx(5.3125).epsilon(1e-12));
  CHECK(s.value(0.005) == 0.0);
  CHECK(s.value(0.055) == 0.0);
  CHECK(s.value(0.01) >= 0.0);
  CHECK(s.integral(0.0, 0.06) == doctest::Approx(0.9).epsilon(1e-13));
  CHECK(s.breakpoints() == std::vector<double>{0.01, 0.05});

  CHECK_THROWS_AS(OuttakeProfile::constant(-1.0), ValidationError);
  CHECK_THROWS_AS(
      OuttakeProfile::piecewise_linear({0.0, 0.1}, {0.0, -0.2}),
      ValidationError);
  CHECK_THROWS_AS(c.integral(0.5, 0.1), ValidationError);
}
