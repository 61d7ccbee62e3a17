#pragma once

#include <cstdint>
#include <random>

#include "spectral3/mat3.hpp"

namespace spectral3 {

/// Deterministic sampling helpers for property suites and benchmarks.
/// All draws go through explicit bit manipulation so results are identical
/// across standard library implementations.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(rng_() >> 11) * 0x1p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Mat3<double> matrix(double lo, double hi) {
    Mat3<double> m;
    for (int i = 0; i < 9; ++i) m.e[i] = uniform(lo, hi);
    return m;
  }

  Mat3<double> integer_matrix(int lo, int hi) {
    Mat3<double> m;
    for (int i = 0; i < 9; ++i) m.e[i] = static_cast<double>(uniform_int(lo, hi));
    return m;
  }

  Mat3<double> symmetric_matrix(double lo, double hi) {
    Mat3<double> m;
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) {
        double v = uniform(lo, hi);
        m(i, j) = v;
        m(j, i) = v;
      }
    }
    return m;
  }

  /// Non-singular transform with entries in [-2, 2] and |det| > 0.1.
  Mat3<double> well_conditioned_transform() {
    for (;;) {
      Mat3<double> u = matrix(-2.0, 2.0);
      if (std::abs(det3(u)) > 0.1) return u;
    }
  }

  /// Rational transform: integer entries in [-2, 2], |det| > 0.1 (so >= 1).
  Mat3<double> rational_transform() {
    for (;;) {
      Mat3<double> u = integer_matrix(-2, 2);
      if (std::abs(det3(u)) > 0.1) return u;
    }
  }

  /// Real-spectrum matrix U diag(lambda) U^-1 with pairwise eigenvalue gaps
  /// of at least min_gap.
  Mat3<double> real_spectrum_matrix(double min_gap, std::array<double, 3>* lambda_out = nullptr,
                                    bool rational_u = false) {
    Mat3<double> u = rational_u ? rational_transform() : well_conditioned_transform();
    double l1 = uniform(-3.0, 3.0);
    double l2 = l1 + min_gap + uniform(0.0, 3.0);
    double l3 = l2 + min_gap + uniform(0.0, 3.0);
    if (lambda_out) *lambda_out = {l1, l2, l3};
    Mat3<double> lam = Mat3<double>::diagonal(l1, l2, l3);
    Result<Mat3<double>> uinv = inverse(u);
    return mat_mul(mat_mul(u, lam), *uinv);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace spectral3
