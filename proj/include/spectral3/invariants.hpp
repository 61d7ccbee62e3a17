#pragma once

#include <array>
#include <cassert>
#include <utility>
#include <vector>

#include "spectral3/mat3.hpp"

namespace spectral3 {

/// Which family of formulas produced a set of derived invariants.
enum class InvariantRoute { Naive, Sop };

inline const char* to_string(InvariantRoute r) {
  return r == InvariantRoute::Naive ? "naive" : "sop";
}

/// Coefficients of the characteristic polynomial
/// P(x) = x^3 - i1 x^2 + i2 x - i3.
template <typename T>
struct PrincipalInvariants {
  T i1, i2, i3;
};

template <typename T>
struct DerivedInvariants {
  T delta_p, delta_q, delta;
  InvariantRoute method;
};

template <typename T>
PrincipalInvariants<T> principal_invariants(const Mat3<T>& a) {
  T i1 = trace(a);
  T tr_a2 = trace(mat_mul(a, a));
  T i2 = (i1 * i1 - tr_a2) / T(2);
  T i3 = det3(a);
  return {i1, i2, i3};
}

/// Delta_p = I1^2 - 3 I2, Delta_q = 2 I1^3 - 9 I1 I2 + 27 I3.
template <typename T>
std::pair<T, T> delta_pq_naive(const PrincipalInvariants<T>& inv) {
  T dp = inv.i1 * inv.i1 - T(3) * inv.i2;
  T dq = T(2) * inv.i1 * inv.i1 * inv.i1 - T(9) * inv.i1 * inv.i2 + T(27) * inv.i3;
  return {dp, dq};
}

/// 18 I1 I2 I3 + I1^2 I2^2 - 4 I1^3 I3 - 4 I2^3 - 27 I3^2, summed in printed
/// order. Cancels catastrophically near repeated eigenvalues.
template <typename T>
T discriminant_naive(const PrincipalInvariants<T>& inv) {
  const T& i1 = inv.i1;
  const T& i2 = inv.i2;
  const T& i3 = inv.i3;
  T t1 = T(18) * i1 * i2 * i3;
  T t2 = i1 * i1 * i2 * i2;
  T t3 = T(4) * i1 * i1 * i1 * i3;
  T t4 = T(4) * i2 * i2 * i2;
  T t5 = T(27) * i3 * i3;
  return (((t1 + t2) - t3) - t4) - t5;
}

template <typename T>
T discriminant_dpdq(const T& dp, const T& dq) {
  return (T(4) * dp * dp * dp - dq * dq) / T(27);
}

inline constexpr std::array<int, 14> kSopWeights{9, 6, 6, 6, 8, 8, 8, 2, 2, 2, 2, 2, 2, 1};
inline constexpr std::array<int, 6> kSopWeightsP{6, 6, 6, 1, 1, 1};

// The 14 factor polynomials of the condensed sum-of-products discriminant.
// Stored as explicit expressions (not derived at runtime); a test validates
// them against the naive discriminant in extended precision. Terms are summed
// in the printed order.
template <typename T>
std::array<T, 14> sop_x(const Mat3<T>& A) {
  const T &a11 = A(0, 0), &a12 = A(0, 1), &a13 = A(0, 2);
  const T &a21 = A(1, 0), &a22 = A(1, 1), &a23 = A(1, 2);
  const T &a31 = A(2, 0), &a32 = A(2, 1), &a33 = A(2, 2);
  std::array<T, 14> x;
  x[0] = a12 * a23 * a31 - a13 * a21 * a32;
  x[1] = a12 * a12 * a23 - a12 * a13 * a22 + a12 * a13 * a33 - a13 * a13 * a32;
  x[2] = a11 * a12 * a32 - a12 * a12 * a31 - a12 * a32 * a33 + a13 * a32 * a32;
  x[3] = a11 * a13 * a23 + a12 * a23 * a23 - a13 * a13 * a21 - a13 * a22 * a23;
  x[4] = a11 * a12 * a23 - a12 * a13 * a21 - a12 * a23 * a33 + a13 * a23 * a32;
  x[5] = a11 * a13 * a32 - a12 * a13 * a31 + a12 * a23 * a32 - a13 * a22 * a32;
  x[6] = a12 * a21 * a23 - a13 * a21 * a22 + a13 * a21 * a33 - a13 * a23 * a31;
  x[7] = a11 * a11 * a23 - a11 * a13 * a21 - a11 * a22 * a23 - a11 * a23 * a33 +
         a12 * a21 * a23 + a13 * a21 * a33 + a22 * a23 * a33 - a23 * a23 * a32;
  x[8] = a11 * a11 * a23 - a11 * a13 * a21 - a11 * a22 * a23 - a11 * a23 * a33 +
         a13 * a21 * a22 + a13 * a23 * a31 + a22 * a23 * a33 - a23 * a23 * a32;
  x[9] = a11 * a12 * a22 - a11 * a12 * a33 - a12 * a12 * a21 + a12 * a13 * a31 -
         a12 * a22 * a33 + a12 * a33 * a33 + a13 * a22 * a32 - a13 * a32 * a33;
  x[10] = a11 * a12 * a22 - a11 * a12 * a33 + a11 * a13 * a32 - a12 * a12 * a21 -
          a12 * a22 * a33 + a12 * a23 * a32 + a12 * a33 * a33 - a13 * a32 * a33;
  x[11] = a11 * a12 * a23 - a11 * a13 * a22 + a11 * a13 * a33 - a12 * a22 * a23 -
          a13 * a13 * a31 + a13 * a22 * a22 - a13 * a22 * a33 + a13 * a23 * a32;
  x[12] = a11 * a13 * a22 - a11 * a13 * a33 - a12 * a13 * a21 + a12 * a22 * a23 -
          a12 * a23 * a33 + a13 * a13 * a31 - a13 * a22 * a22 + a13 * a22 * a33;
  x[13] = a11 * a11 * (a22 - a33) + a22 * a22 * (a33 - a11) + a33 * a33 * (a11 - a22) +
          a11 * (a13 * a31 - a12 * a21) + a22 * (a12 * a21 - a23 * a32) +
          a33 * (a23 * a32 - a13 * a31);
  return x;
}

template <typename T>
std::array<T, 14> sop_y(const Mat3<T>& A) {
  const T &a11 = A(0, 0), &a12 = A(0, 1), &a13 = A(0, 2);
  const T &a21 = A(1, 0), &a22 = A(1, 1), &a23 = A(1, 2);
  const T &a31 = A(2, 0), &a32 = A(2, 1), &a33 = A(2, 2);
  std::array<T, 14> y;
  y[0] = a13 * a21 * a32 - a12 * a23 * a31;
  y[1] = a21 * a21 * a32 - a21 * a22 * a31 + a21 * a31 * a33 - a23 * a31 * a31;
  y[2] = a11 * a21 * a23 - a13 * a21 * a21 - a21 * a23 * a33 + a23 * a23 * a31;
  y[3] = a11 * a31 * a32 - a12 * a31 * a31 + a21 * a32 * a32 - a22 * a31 * a32;
  y[4] = a11 * a21 * a32 - a12 * a21 * a31 - a21 * a32 * a33 + a23 * a31 * a32;
  y[5] = a11 * a23 * a31 - a13 * a21 * a31 + a21 * a23 * a32 - a22 * a23 * a31;
  y[6] = a12 * a21 * a32 - a12 * a22 * a31 + a12 * a31 * a33 - a13 * a31 * a32;
  y[7] = a11 * a11 * a32 - a11 * a12 * a31 - a11 * a22 * a32 - a11 * a32 * a33 +
         a12 * a21 * a32 + a12 * a31 * a33 + a22 * a32 * a33 - a23 * a32 * a32;
  y[8] = a11 * a11 * a32 - a11 * a12 * a31 - a11 * a22 * a32 - a11 * a32 * a33 +
         a12 * a22 * a31 + a13 * a31 * a32 + a22 * a32 * a33 - a23 * a32 * a32;
  y[9] = a11 * a21 * a22 - a11 * a21 * a33 - a12 * a21 * a21 + a13 * a21 * a31 -
         a21 * a22 * a33 + a21 * a33 * a33 + a22 * a23 * a31 - a23 * a31 * a33;
  y[10] = a11 * a21 * a22 - a11 * a21 * a33 + a11 * a23 * a31 - a12 * a21 * a21 -
          a21 * a22 * a33 + a21 * a23 * a32 + a21 * a33 * a33 - a23 * a31 * a33;
  y[11] = a11 * a21 * a32 - a11 * a22 * a31 + a11 * a31 * a33 - a13 * a31 * a31 -
          a21 * a22 * a32 + a22 * a22 * a31 - a22 * a31 * a33 + a23 * a31 * a32;
  y[12] = a11 * a22 * a31 - a11 * a31 * a33 - a12 * a21 * a31 + a13 * a31 * a31 +
          a21 * a22 * a32 - a21 * a32 * a33 - a22 * a22 * a31 + a22 * a31 * a33;
  y[13] = a11 * a11 * (a22 - a33) + a22 * a22 * (a33 - a11) + a33 * a33 * (a11 - a22) +
          a11 * (a13 * a31 - a12 * a21) + a22 * (a12 * a21 - a23 * a32) +
          a33 * (a23 * a32 - a13 * a31);
  return y;
}

/// Discriminant as the weighted 14-product inner product x^T D y. Free of
/// catastrophic cancellation as the discriminant approaches zero.
template <typename T>
T discriminant_sop(const Mat3<T>& a) {
  std::array<T, 14> x = sop_x(a);
  std::array<T, 14> y = sop_y(a);
  T sum = T(static_cast<double>(kSopWeights[0])) * x[0] * y[0];
  for (int m = 1; m < 14; ++m) {
    sum = sum + T(static_cast<double>(kSopWeights[m])) * x[m] * y[m];
  }
  return sum;
}

template <typename T>
std::array<T, 6> sop_xp(const Mat3<T>& A) {
  return {A(1, 0), A(2, 0), A(2, 1),
          A(1, 1) - A(0, 0), A(2, 2) - A(0, 0), A(2, 2) - A(1, 1)};
}

template <typename T>
std::array<T, 6> sop_yp(const Mat3<T>& A) {
  return {A(0, 1), A(0, 2), A(1, 2),
          A(1, 1) - A(0, 0), A(2, 2) - A(0, 0), A(2, 2) - A(1, 1)};
}

/// Delta_p = 1/2 [6(A21 A12 + A31 A13 + A32 A23) + (A22-A11)^2 + (A33-A11)^2
/// + (A33-A22)^2]: the 6-product counterpart of discriminant_sop.
template <typename T>
T deltap_sop(const Mat3<T>& a) {
  std::array<T, 6> x = sop_xp(a);
  std::array<T, 6> y = sop_yp(a);
  T sum = T(static_cast<double>(kSopWeightsP[0])) * x[0] * y[0];
  for (int m = 1; m < 6; ++m) {
    sum = sum + T(static_cast<double>(kSopWeightsP[m])) * x[m] * y[m];
  }
  return sum / T(2);
}

/// Ordered list of distinct power exponents; strictly increasing.
using MultiIndex = std::vector<int>;

namespace detail_inv {

// Determinant of a small trace-Gram block, sizes 1..3.
template <typename T>
T small_det(const std::vector<std::vector<T>>& b) {
  std::size_t n = b.size();
  if (n == 1) return b[0][0];
  if (n == 2) return b[0][0] * b[1][1] - b[0][1] * b[1][0];
  T c0 = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]);
  T c1 = b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]);
  T c2 = b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
  return (c0 - c1) + c2;
}

}  // namespace detail_inv

/// Sub-discriminant Delta_kl = det(B_kl) with (B_kl)_ij = tr(A^(k_i + l_j)).
/// Multi-indices must have equal length and exponent sums <= 4.
template <typename T>
T subdiscriminant(const Mat3<T>& a, const MultiIndex& k, const MultiIndex& l) {
  assert(k.size() == l.size() && !k.empty() && k.size() <= 3 &&
         "mismatched multi-index lengths");
  int max_pow = k.back() + l.back();
  assert(max_pow <= 4);
  std::array<T, 5> tr_pow;
  Mat3<T> p = Mat3<T>::identity();
  tr_pow[0] = T(3);
  for (int q = 1; q <= max_pow; ++q) {
    p = mat_mul(a, p);
    tr_pow[static_cast<std::size_t>(q)] = trace(p);
  }
  std::size_t n = k.size();
  std::vector<std::vector<T>> b(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      b[i][j] = tr_pow[static_cast<std::size_t>(k[i] + l[j])];
  return detail_inv::small_det(b);
}

/// Delta_q = 3 Delta_(0,1)(0,2) - 4 tr(A) Delta_p, with Delta_p from the
/// sum-of-products form. Still cancels between the two terms (no fully
/// cancellation-free form is known).
template <typename T>
T deltaq_subdisc(const Mat3<T>& a) {
  T sub = subdiscriminant(a, MultiIndex{0, 1}, MultiIndex{0, 2});
  return T(3) * sub - T(4) * trace(a) * deltap_sop(a);
}

/// Discriminant as det of the symmetric trace matrix B_ij = tr(A^(i+j-2)).
template <typename T>
T discriminant_gram(const Mat3<T>& a) {
  return subdiscriminant(a, MultiIndex{0, 1, 2}, MultiIndex{0, 1, 2});
}

template <typename T>
DerivedInvariants<T> derived_invariants(const Mat3<T>& a, InvariantRoute route) {
  if (route == InvariantRoute::Naive) {
    PrincipalInvariants<T> inv = principal_invariants(a);
    auto [dp, dq] = delta_pq_naive(inv);
    return {dp, dq, discriminant_naive(inv), route};
  }
  return {deltap_sop(a), deltaq_subdisc(a), discriminant_sop(a), route};
}

// Term count of the uncondensed Cauchy-Binet expansion for n = 3:
// C(9,3) - C(6,3) = 64 nonzero products.
constexpr long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
static_assert(binomial(9, 3) - binomial(6, 3) == 64);

}  // namespace spectral3
