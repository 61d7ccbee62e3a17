#pragma once

#include <array>
#include <cassert>
#include <string>
#include <utility>

#include "spectral3/ddouble.hpp"
#include "spectral3/eig3.hpp"
#include "spectral3/invariants.hpp"
#include "spectral3/mat3.hpp"
#include "spectral3/projectors.hpp"

namespace spectral3 {

/// Benchmark family: which invariant is driven to zero as delta -> 0.
enum class CriticalCase { DeltaToZero, DeltaPToZero, DeltaQToZero };

inline const char* to_string(CriticalCase c) {
  switch (c) {
    case CriticalCase::DeltaToZero: return "delta";
    case CriticalCase::DeltaPToZero: return "deltap";
    default: return "deltaq";
  }
}

/// Similarity transformation used to build the test matrix. CaseI is a fixed
/// well-conditioned +-1 matrix; CaseII(gamma) degrades as gamma -> 0 and is
/// singular exactly at gamma = 0.
struct TransformCase {
  enum class Kind { CaseI, CaseII };
  Kind kind = Kind::CaseI;
  double gamma = 1e-3;  // CaseII only; must be > 0

  static TransformCase case_i() { return {Kind::CaseI, 0.0}; }
  static TransformCase case_ii(double gamma) { return {Kind::CaseII, gamma}; }
};

inline const char* to_string(TransformCase::Kind k) {
  return k == TransformCase::Kind::CaseI ? "case1" : "case2";
}

/// Extended-precision reference values, recomputed from a rounded
/// working-precision matrix.
struct GroundTruth {
  std::array<DDouble, 3> lambda;  // ascending
  DDouble i1, i2, i3;
  DDouble delta_p, delta_q, delta;
  Mat3<double> matrix;
};

inline Vec3<DDouble> critical_lambda(CriticalCase c, const DDouble& delta) {
  switch (c) {
    case CriticalCase::DeltaToZero:
      return {DDouble(-1.0), DDouble(1.0), DDouble(1.0) + delta};
    case CriticalCase::DeltaPToZero:
      return {DDouble(1.0), DDouble(1.0), DDouble(1.0) + delta};
    default:
      return {DDouble(0.0), DDouble(1.0), DDouble(2.0) + delta};
  }
}

inline Mat3<DDouble> transform_matrix(const TransformCase& t) {
  if (t.kind == TransformCase::Kind::CaseI) {
    return Mat3<DDouble>(DDouble(1), DDouble(-1), DDouble(1),
                         DDouble(1), DDouble(1), DDouble(1),
                         DDouble(-1), DDouble(-1), DDouble(1));
  }
  assert(t.gamma > 0.0 && "CaseII transform is singular at gamma = 0");
  return Mat3<DDouble>(DDouble(1), DDouble(1), DDouble(1),
                       DDouble(1), DDouble(0), DDouble(1),
                       DDouble(2), DDouble(1), DDouble(2.0) + DDouble(t.gamma));
}

/// Max-abs condition estimate kappa(U) = ||U|| * ||U^-1|| (infinity norm).
inline double condition_number(const Mat3<DDouble>& u) {
  auto inf_norm = [](const Mat3<DDouble>& m) {
    double best = 0.0;
    for (int i = 0; i < 3; ++i) {
      double row = 0.0;
      for (int j = 0; j < 3; ++j) row += std::abs(to_double(m(i, j)));
      if (row > best) best = row;
    }
    return best;
  };
  Result<Mat3<DDouble>> inv = inverse(u);
  assert(inv.ok());
  return inf_norm(u) * inf_norm(*inv);
}

/// Ground-truth invariants and eigenvalues of a working-precision matrix,
/// evaluated in double-double. Principal invariants and Delta_q use the
/// trace-based definitions; Delta and Delta_p use the sum-of-products forms,
/// which stay accurate even where the naive forms cancel at 2x precision.
/// Eigenvalues follow the arccos route.
inline Result<GroundTruth> reference_invariants(const Mat3<double>& b) {
  Mat3<DDouble> bd = Mat3<DDouble>::from(b, [](double x) { return DDouble(x); });
  PrincipalInvariants<DDouble> inv = principal_invariants(bd);

  GroundTruth gt;
  gt.matrix = b;
  gt.i1 = inv.i1;
  gt.i2 = inv.i2;
  gt.i3 = inv.i3;
  gt.delta_p = deltap_sop(bd);
  auto [dp_naive, dq_naive] = delta_pq_naive(inv);
  (void)dp_naive;
  gt.delta_q = dq_naive;
  gt.delta = discriminant_sop(bd);

  double scale = to_double(max_abs(bd));
  double s6 = std::pow(scale, 6);
  double floor = std::pow(2.0, -80) * s6;
  if (to_double(gt.delta) < -floor) return Error::NonRealSpectrum;
  if (to_double(gt.delta) < 0.0) gt.delta = DDouble(0.0);
  if (to_double(gt.delta_p) < 0.0) gt.delta_p = DDouble(0.0);

  Result<DDouble> phi = angle(gt.delta, gt.delta_q, AngleMethod::Arccos);
  if (!phi.ok()) return phi.error();
  std::array<DDouble, 3> lam = eigenvalues3(gt.i1, gt.delta_p, *phi);
  gt.lambda = lam;
  return gt;
}

/// Builds B = U Lambda U^-1 in double-double, rounds entrywise to working
/// precision, and recomputes the ground truth from the rounded matrix. This
/// isolates algorithmic rounding from representation rounding.
inline Result<std::pair<Mat3<double>, GroundTruth>> make_test_matrix(
    CriticalCase c, const TransformCase& t, double delta) {
  assert(delta >= 0.0);
  Mat3<DDouble> u = transform_matrix(t);
  Vec3<DDouble> lam = critical_lambda(c, DDouble(delta));
  Result<Mat3<DDouble>> uinv = inverse(u);
  if (!uinv.ok()) return uinv.error();
  Mat3<DDouble> b =
      mat_mul(mat_mul(u, Mat3<DDouble>::diagonal(lam(0), lam(1), lam(2))), *uinv);
  Mat3<double> rounded =
      Mat3<double>::from(b, [](const DDouble& x) { return to_double(x); });
  Result<GroundTruth> gt = reference_invariants(rounded);
  if (!gt.ok()) return gt.error();
  return std::make_pair(rounded, *gt);
}

/// Reference projectors of the rounded matrix via double-double Frobenius
/// covariants; requires the reference spectrum to be distinct (delta > 0).
inline std::array<Mat3<DDouble>, 3> reference_projectors(const GroundTruth& gt) {
  Mat3<DDouble> bd =
      Mat3<DDouble>::from(gt.matrix, [](double x) { return DDouble(x); });
  return frobenius_covariants(bd, gt.lambda);
}

}  // namespace spectral3
