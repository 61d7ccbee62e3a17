#include "doctest.h"

#include <cmath>

#include "spectral3/projectors.hpp"

using namespace spectral3;

namespace {

// Similarity transform with integer entries, det 2.
const Mat3<double> kU(1, 1, 0, 0, 1, 1, 1, 0, 1);

Mat3<double> conjugate_diag(double l1, double l2, double l3) {
  return mat_mul(mat_mul(kU, Mat3<double>::diagonal(l1, l2, l3)), *inverse(kU));
}

}  // namespace

TEST_CASE("diagonal distinct spectrum gives coordinate projectors") {
  Result<Projectors> p = projectors_dual(Mat3<double>::diagonal(1, 2, 3));
  REQUIRE(p.ok());
  CHECK(p->multiplicity == Multiplicity::Distinct);
  REQUIRE(p->entries.size() == 3);
  for (int k = 0; k < 3; ++k) {
    const ProjectorEntry& e = p->entries[static_cast<std::size_t>(k)];
    CHECK(e.lambda == doctest::Approx(k + 1.0).epsilon(1e-14));
    CHECK(e.multiplicity == 1);
    Mat3<double> expect = Mat3<double>::zero();
    expect(k, k) = 1.0;
    CHECK(max_abs(e.projector - expect) < 1e-13);
  }
  CHECK(max_abs(p->sum() - Mat3<double>::identity()) < 1e-13);
  CHECK(max_abs(p->reconstruct() - Mat3<double>::diagonal(1, 2, 3)) < 1e-13);
}

TEST_CASE("projector identities on a conjugated spectrum") {
  Mat3<double> a = conjugate_diag(-2, 0.5, 3);
  Result<Projectors> p = projectors_dual(a);
  REQUIRE(p.ok());
  REQUIRE(p->entries.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const Mat3<double>& ei = p->entries[i].projector;
    CHECK(std::abs(trace(ei) - 1.0) < 1e-12);
    CHECK(std::abs(det3(ei)) < 1e-12);
    for (std::size_t j = 0; j < 3; ++j) {
      Mat3<double> prod = mat_mul(ei, p->entries[j].projector);
      Mat3<double> expect = (i == j) ? ei : Mat3<double>::zero();
      CHECK(max_abs(prod - expect) < 1e-12);
    }
    // A E = lambda E for right projectors.
    CHECK(max_abs(mat_mul(a, ei) - p->entries[i].lambda * ei) < 1e-11);
  }
  CHECK(max_abs(p->reconstruct() - a) < 1e-11);
}

TEST_CASE("frobenius covariants match the dual-number projectors") {
  Mat3<double> a = conjugate_diag(-1, 1, 4);
  Result<Projectors> d = projectors_dual(a);
  Result<Projectors> f = projectors_frobenius(a, {-1, 1, 4});
  REQUIRE(d.ok());
  REQUIRE(f.ok());
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(max_abs(d->entries[k].projector - f->entries[k].projector) < 1e-11);
  }
}

TEST_CASE("frobenius route rejects clustered spectra") {
  Mat3<double> a = conjugate_diag(1, 1, 2);
  Result<Projectors> f = projectors_frobenius(a, {1, 1, 2});
  REQUIRE(!f.ok());
  CHECK(f.error() == Error::DegenerateSpectrum);
}

TEST_CASE("double eigenvalue: simple projector plus rank-2 complement") {
  // Repeated pair on top (DoubleHigh): lambda = (-1, 1, 1).
  Mat3<double> a = conjugate_diag(-1, 1, 1);
  Result<Projectors> p = projectors_dual(a);
  REQUIRE(p.ok());
  CHECK(p->multiplicity == Multiplicity::DoubleHigh);
  REQUIRE(p->entries.size() == 2);
  CHECK(p->entries[0].lambda == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(p->entries[0].multiplicity == 1);
  CHECK(p->entries[1].lambda == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(p->entries[1].multiplicity == 2);
  CHECK(std::abs(trace(p->entries[0].projector) - 1.0) < 1e-12);
  CHECK(std::abs(trace(p->entries[1].projector) - 2.0) < 1e-12);
  CHECK(max_abs(p->sum() - Mat3<double>::identity()) < 1e-12);
  CHECK(max_abs(p->reconstruct() - a) < 1e-11);

  // Repeated pair below (DoubleLow): lambda = (1, 1, 3).
  Mat3<double> b = conjugate_diag(1, 1, 3);
  Result<Projectors> q = projectors_dual(b);
  REQUIRE(q.ok());
  CHECK(q->multiplicity == Multiplicity::DoubleLow);
  REQUIRE(q->entries.size() == 2);
  CHECK(q->entries[0].multiplicity == 2);
  CHECK(q->entries[1].multiplicity == 1);
  CHECK(max_abs(q->reconstruct() - b) < 1e-11);
}

TEST_CASE("triple eigenvalue yields the identity projector") {
  Mat3<double> a = 2.5 * Mat3<double>::identity();
  Result<Projectors> p = projectors_dual(a);
  REQUIRE(p.ok());
  CHECK(p->multiplicity == Multiplicity::Triple);
  REQUIRE(p->entries.size() == 1);
  CHECK(p->entries[0].lambda == 2.5);
  CHECK(p->entries[0].multiplicity == 3);
  CHECK(p->entries[0].projector == Mat3<double>::identity());
}

TEST_CASE("projector entries are eigenvalue derivatives") {
  Mat3<double> a = conjugate_diag(-2, 1, 3);
  Result<Projectors> p = projectors_dual(a);
  REQUIRE(p.ok());
  const double h = 1e-6;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Mat3<double> ap = a, am = a;
      ap(i, j) += h;
      am(i, j) -= h;
      Result<EigenTriple<double>> ep = eigenvalues(ap);
      Result<EigenTriple<double>> em = eigenvalues(am);
      REQUIRE(ep.ok());
      REQUIRE(em.ok());
      for (std::size_t k = 0; k < 3; ++k) {
        double fd = (ep->lambda[k] - em->lambda[k]) / (2.0 * h);
        // d lambda_k / d A_ij is entry (j, i) of E_k.
        CHECK(p->entries[k].projector(j, i) == doctest::Approx(fd).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("matrix functions via the Sylvester formula") {
  Mat3<double> a = conjugate_diag(0.5, 1, 2);

  Result<Mat3<double>> sq = matrix_function(a, [](double x) { return x * x; });
  REQUIRE(sq.ok());
  CHECK(max_abs(*sq - mat_mul(a, a)) < 1e-12);

  Result<Mat3<double>> ex = matrix_function(a, [](double x) { return std::exp(x); });
  REQUIRE(ex.ok());
  Mat3<double> expect =
      mat_mul(mat_mul(kU, Mat3<double>::diagonal(std::exp(0.5), std::exp(1.0),
                                                 std::exp(2.0))),
              *inverse(kU));
  CHECK(max_abs(*ex - expect) < 1e-11);

  // Repeated spectrum goes through the merged projectors.
  Mat3<double> b = conjugate_diag(1, 1, 4);
  Result<Mat3<double>> sqb = matrix_function(b, [](double x) { return x * x; });
  REQUIRE(sqb.ok());
  CHECK(max_abs(*sqb - mat_mul(b, b)) < 1e-11);
}
