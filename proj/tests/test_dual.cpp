#include "doctest.h"

#include <cmath>

#include "spectral3/dual.hpp"

using namespace spectral3;

TEST_CASE("seeded slots carry unit derivatives") {
  Dual x = Dual::seeded(2.0, 3);
  CHECK(x.v == 2.0);
  CHECK(x.d[3] == 1.0);
  CHECK(x.d[0] == 0.0);
  CHECK(!x.gradient_is_zero());
  CHECK(Dual(5.0).gradient_is_zero());
}

TEST_CASE("product, quotient, and chain rules") {
  Dual x = Dual::seeded(3.0, 0);
  Dual y = Dual::seeded(4.0, 1);

  Dual p = x * y;
  CHECK(p.v == 12.0);
  CHECK(p.d[0] == 4.0);  // d(xy)/dx = y
  CHECK(p.d[1] == 3.0);

  Dual q = x / y;
  CHECK(q.v == 0.75);
  CHECK(q.d[0] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(q.d[1] == doctest::Approx(-3.0 / 16.0).epsilon(1e-15));

  Dual s = sqrt(x * x + y * y);  // d/dx = x / r
  CHECK(s.v == 5.0);
  CHECK(s.d[0] == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(s.d[1] == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("sqrt of a constant zero stays constant") {
  Dual z = sqrt(Dual(0.0));
  CHECK(z.v == 0.0);
  CHECK(z.gradient_is_zero());
  CHECK(z.gradient_is_finite());
}

TEST_CASE("trig derivatives match central finite differences") {
  const double h = 1e-6;
  double x0 = 0.7;

  Dual c = cos(Dual::seeded(x0, 0));
  double fd_c = (std::cos(x0 + h) - std::cos(x0 - h)) / (2 * h);
  CHECK(c.d[0] == doctest::Approx(fd_c).epsilon(1e-9));

  Dual a = acos(Dual::seeded(0.3, 0));
  double fd_a = (std::acos(0.3 + h) - std::acos(0.3 - h)) / (2 * h);
  CHECK(a.d[0] == doctest::Approx(fd_a).epsilon(1e-9));

  // acos of a constant at the domain edge: no NaN leaks into the gradient.
  Dual edge = acos(Dual(1.0));
  CHECK(edge.v == 0.0);
  CHECK(edge.gradient_is_finite());
}

TEST_CASE("atan2 total derivative") {
  const double h = 1e-6;
  double y0 = 1.3, x0 = -0.4;
  Dual r = atan2(Dual::seeded(y0, 0), Dual::seeded(x0, 1));
  CHECK(r.v == std::atan2(y0, x0));
  double fd_y = (std::atan2(y0 + h, x0) - std::atan2(y0 - h, x0)) / (2 * h);
  double fd_x = (std::atan2(y0, x0 + h) - std::atan2(y0, x0 - h)) / (2 * h);
  CHECK(r.d[0] == doctest::Approx(fd_y).epsilon(1e-9));
  CHECK(r.d[1] == doctest::Approx(fd_x).epsilon(1e-9));
}

TEST_CASE("comparisons act on values only") {
  CHECK(Dual::seeded(1.0, 0) == Dual::seeded(1.0, 5));
  CHECK(Dual(1.0) < Dual(2.0));
  CHECK(abs(Dual(-3.0)).v == 3.0);
}
