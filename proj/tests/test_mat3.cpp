#include "doctest.h"

#include "spectral3/mat3.hpp"

using namespace spectral3;

namespace {

const Mat3<double> kFixed(2, -1, 0,
                          -1, 2, -1,
                          0, -1, 2);

}  // namespace

TEST_CASE("trace and determinant of fixed matrices") {
  CHECK(trace(kFixed) == 6.0);
  CHECK(det3(kFixed) == 4.0);
  CHECK(trace(Mat3<double>::identity()) == 3.0);
  CHECK(det3(Mat3<double>::identity()) == 1.0);
  CHECK(det3(Mat3<double>::diagonal(1, 2, 3)) == 6.0);
  // Singular by construction: equal rows.
  Mat3<double> s(1, 2, 3, 1, 2, 3, 0, 1, 0);
  CHECK(det3(s) == 0.0);
}

TEST_CASE("inverse round-trips and reports singular input") {
  Result<Mat3<double>> inv = inverse(kFixed);
  REQUIRE(inv.ok());
  Mat3<double> p = mat_mul(kFixed, *inv);
  CHECK(max_abs(p - Mat3<double>::identity()) < 1e-15);

  Mat3<double> s(1, 2, 3, 2, 4, 6, 0, 1, 0);
  Result<Mat3<double>> bad = inverse(s);
  REQUIRE(!bad.ok());
  CHECK(bad.error() == Error::SingularMatrix);
}

TEST_CASE("matrix product against a hand-expanded case") {
  Mat3<double> a(1, 2, 3, 4, 5, 6, 7, 8, 9);
  Mat3<double> b(9, 8, 7, 6, 5, 4, 3, 2, 1);
  Mat3<double> expect(30, 24, 18, 84, 69, 54, 138, 114, 90);
  CHECK(mat_mul(a, b) == expect);
  CHECK(mat_mul(a, Mat3<double>::identity()) == a);
  CHECK(mat_mul(Mat3<double>::identity(), a) == a);
}

TEST_CASE("mat_pow is definitionally repeated left multiplication") {
  Mat3<double> a(0.3, -1.2, 0.7, 2.1, 0.4, -0.9, -0.5, 1.8, 0.2);
  CHECK(mat_pow(a, 0) == Mat3<double>::identity());
  CHECK(mat_pow(a, 1) == mat_mul(a, Mat3<double>::identity()));
  CHECK(mat_pow(a, 2) == mat_mul(a, mat_mul(a, Mat3<double>::identity())));
  CHECK(mat_pow(a, 4) ==
        mat_mul(a, mat_mul(a, mat_mul(a, mat_mul(a, Mat3<double>::identity())))));
}

TEST_CASE("transpose, scaling, max_abs") {
  Mat3<double> a(1, 2, 3, 4, 5, 6, 7, 8, -9);
  CHECK(transpose(transpose(a)) == a);
  CHECK(transpose(a)(0, 1) == 4.0);
  CHECK(max_abs(a) == 9.0);
  CHECK(max_abs(2.0 * a) == 18.0);
  CHECK((a - a) == Mat3<double>::zero());
}

TEST_CASE("mat_vec and outer product") {
  Vec3<double> x(1, 2, 3);
  Vec3<double> y = mat_vec(Mat3<double>::diagonal(2, 3, 4), x);
  CHECK(y(0) == 2.0);
  CHECK(y(1) == 6.0);
  CHECK(y(2) == 12.0);
  Mat3<double> o = outer(x, x);
  CHECK(trace(o) == 14.0);
  CHECK(det3(o) == 0.0);  // rank one
}
