#include "doctest.h"

#include <cmath>

#include "spectral3/ddouble.hpp"

using namespace spectral3;

namespace {

// |a - (hi + lo)| via exact double-double subtraction.
double dd_err(const DDouble& a, double hi, double lo) {
  return std::abs(to_double(a - DDouble(hi, lo)));
}

}  // namespace

TEST_CASE("error-free addition and multiplication") {
  // 1 + 2^-60 is not representable in double; the pair keeps both parts.
  DDouble x = DDouble(1.0) + DDouble(0x1p-60);
  CHECK(x.hi() == 1.0);
  CHECK(x.lo() == 0x1p-60);
  CHECK(to_double(x - DDouble(1.0)) == 0x1p-60);

  // (1 + 2^-30)^2 = 1 + 2^-29 + 2^-60 exactly.
  DDouble y = DDouble(1.0 + 0x1p-30) * DDouble(1.0 + 0x1p-30);
  CHECK(dd_err(y, 1.0 + 0x1p-29, 0x1p-60) == 0.0);
}

TEST_CASE("division recovers exact rationals") {
  DDouble third = DDouble(1.0) / DDouble(3.0);
  CHECK(std::abs(to_double(third * DDouble(3.0) - DDouble(1.0))) < 1e-31);
  DDouble q = DDouble(22.0) / DDouble(7.0);
  CHECK(std::abs(to_double(q * DDouble(7.0) - DDouble(22.0))) < 1e-30);
}

TEST_CASE("sqrt against frozen 106-bit references") {
  CHECK(dd_err(sqrt(DDouble(2.0)), 1.4142135623730951, -9.667293313452913e-17) < 1e-31);
  CHECK(to_double(sqrt(DDouble(4.0)) - DDouble(2.0)) == 0.0);
  CHECK(to_double(sqrt(DDouble(0.0))) == 0.0);
  DDouble r = sqrt(DDouble(1e-30));
  CHECK(std::abs(to_double(r * r - DDouble(1e-30))) < 1e-60);
}

TEST_CASE("sin and cos against frozen 106-bit references") {
  DDouble s, c;
  sin_cos(DDouble(1.0), s, c);
  CHECK(dd_err(c, 0.5403023058681398, -4.760954612604417e-17) < 1e-31);
  CHECK(dd_err(s, 0.8414709848078965, 1.776845092935536e-18) < 1e-31);

  // Arguments beyond the first period exercise the reduction.
  CHECK(dd_err(cos(DDouble(10.0)), -0.8390715290764524, -1.4147119988953418e-17) < 1e-30);
  CHECK(dd_err(sin(DDouble(-2.5)), -0.5984721441039565, 5.521403334082375e-17) < 1e-31);
  CHECK(std::abs(to_double(sin(DDouble(0.0)))) == 0.0);
  CHECK(to_double(cos(DDouble(0.0))) == 1.0);
}

TEST_CASE("acos and atan2 against frozen 106-bit references") {
  CHECK(dd_err(acos(DDouble(-0.5)), 2.0943951023931957, -2.144163532902182e-16) < 1e-30);
  CHECK(dd_err(atan2(DDouble(3.0), DDouble(4.0)), 0.6435011087932844,
               1.5834785051444286e-17) < 1e-31);
  // Near the edge of the domain, where double-precision acos loses digits.
  CHECK(dd_err(acos(DDouble(0.99999999)), 0.00014142135671046477,
               2.8961101453685962e-21) < 1e-33);
  CHECK(to_double(acos(DDouble(1.0))) == 0.0);
  CHECK(dd_err(acos(DDouble(-1.0)), 3.141592653589793, 1.2246467991473532e-16) < 1e-31);
  CHECK(to_double(atan2(DDouble(0.0), DDouble(2.0))) == 0.0);
}

TEST_CASE("pi constant is correctly rounded to 106 bits") {
  DDouble s, c;
  sin_cos(detail_dd::kPi, s, c);
  CHECK(std::abs(to_double(s)) < 1e-31);          // sin(pi) = 0
  CHECK(std::abs(to_double(c + DDouble(1.0))) < 1e-31);  // cos(pi) = -1
}

TEST_CASE("comparisons are lexicographic in (hi, lo)") {
  CHECK(DDouble(1.0, 1e-20) > DDouble(1.0));
  CHECK(DDouble(1.0, -1e-20) < DDouble(1.0));
  CHECK(DDouble(1.0) <= DDouble(1.0));
  CHECK(abs(DDouble(-2.5)) == DDouble(2.5));
}
