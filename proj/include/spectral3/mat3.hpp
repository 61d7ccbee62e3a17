#pragma once

#include <array>
#include <cassert>
#include <cmath>

#include "spectral3/scalar.hpp"

namespace spectral3 {

template <typename T>
struct Vec3 {
  std::array<T, 3> c{};

  Vec3() = default;
  Vec3(T x, T y, T z) : c{std::move(x), std::move(y), std::move(z)} {}

  const T& operator()(int i) const {
    assert(i >= 0 && i < 3);
    return c[static_cast<std::size_t>(i)];
  }
  T& operator()(int i) {
    assert(i >= 0 && i < 3);
    return c[static_cast<std::size_t>(i)];
  }
};

/// 3x3 matrix over an abstract scalar, row-major, 0-based indexing.
/// Values are immutable in spirit: every operation below is pure.
template <typename T>
struct Mat3 {
  std::array<T, 9> e{};

  Mat3() = default;
  Mat3(T a00, T a01, T a02, T a10, T a11, T a12, T a20, T a21, T a22)
      : e{std::move(a00), std::move(a01), std::move(a02),
          std::move(a10), std::move(a11), std::move(a12),
          std::move(a20), std::move(a21), std::move(a22)} {}

  const T& operator()(int i, int j) const {
    assert(i >= 0 && i < 3 && j >= 0 && j < 3);
    return e[static_cast<std::size_t>(3 * i + j)];
  }
  T& operator()(int i, int j) {
    assert(i >= 0 && i < 3 && j >= 0 && j < 3);
    return e[static_cast<std::size_t>(3 * i + j)];
  }

  static Mat3 identity() {
    return Mat3(T(1), T(0), T(0), T(0), T(1), T(0), T(0), T(0), T(1));
  }

  static Mat3 zero() { return Mat3(); }

  static Mat3 diagonal(const T& a, const T& b, const T& c) {
    return Mat3(a, T(0), T(0), T(0), b, T(0), T(0), T(0), c);
  }

  template <typename U, typename F>
  static Mat3 from(const Mat3<U>& a, F&& convert) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.e[i] = convert(a.e[i]);
    return r;
  }

  friend bool operator==(const Mat3& a, const Mat3& b) { return a.e == b.e; }
};

template <typename T>
Mat3<T> operator+(const Mat3<T>& a, const Mat3<T>& b) {
  Mat3<T> r;
  for (int i = 0; i < 9; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

template <typename T>
Mat3<T> operator-(const Mat3<T>& a, const Mat3<T>& b) {
  Mat3<T> r;
  for (int i = 0; i < 9; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

template <typename T>
Mat3<T> operator*(const T& s, const Mat3<T>& a) {
  Mat3<T> r;
  for (int i = 0; i < 9; ++i) r.e[i] = s * a.e[i];
  return r;
}

template <typename T>
Mat3<T> transpose(const Mat3<T>& a) {
  Mat3<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
  return r;
}

/// Standard matrix product with fixed left-to-right accumulation, so the
/// rounding pattern is identical on every run and platform.
template <typename T>
Mat3<T> mat_mul(const Mat3<T>& a, const Mat3<T>& b) {
  Mat3<T> r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r(i, j) = (a(i, 0) * b(0, j) + a(i, 1) * b(1, j)) + a(i, 2) * b(2, j);
    }
  }
  return r;
}

/// A^p for p in {0,..,4} by repeated left multiplication (no squaring).
template <typename T>
Mat3<T> mat_pow(const Mat3<T>& a, int p) {
  assert(p >= 0 && p <= 4);
  Mat3<T> r = Mat3<T>::identity();
  for (int k = 0; k < p; ++k) r = mat_mul(a, r);
  return r;
}

template <typename T>
T trace(const Mat3<T>& a) {
  return (a(0, 0) + a(1, 1)) + a(2, 2);
}

/// Cofactor expansion along the first row, summed left to right.
template <typename T>
T det3(const Mat3<T>& a) {
  T c0 = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1));
  T c1 = a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0));
  T c2 = a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
  return (c0 - c1) + c2;
}

/// Adjugate over determinant. Singular input is reported, not thrown.
template <typename T>
Result<Mat3<T>> inverse(const Mat3<T>& a) {
  T det = det3(a);
  if (det == T(0)) return Error::SingularMatrix;
  Mat3<T> adj;
  adj(0, 0) = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
  adj(0, 1) = a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2);
  adj(0, 2) = a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1);
  adj(1, 0) = a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2);
  adj(1, 1) = a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
  adj(1, 2) = a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2);
  adj(2, 0) = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
  adj(2, 1) = a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1);
  adj(2, 2) = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  Mat3<T> r;
  for (int i = 0; i < 9; ++i) r.e[i] = adj.e[i] / det;
  return r;
}

/// Max-abs-entry norm; supplies the scale for every tolerance in the library.
template <typename T>
T max_abs(const Mat3<T>& a) {
  using std::abs;
  T m = abs(a.e[0]);
  for (int i = 1; i < 9; ++i) {
    T v = abs(a.e[i]);
    if (v > m) m = v;
  }
  return m;
}

template <typename T>
Vec3<T> mat_vec(const Mat3<T>& a, const Vec3<T>& x) {
  Vec3<T> r;
  for (int i = 0; i < 3; ++i) {
    r(i) = (a(i, 0) * x(0) + a(i, 1) * x(1)) + a(i, 2) * x(2);
  }
  return r;
}

template <typename T>
Mat3<T> outer(const Vec3<T>& u, const Vec3<T>& v) {
  Mat3<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = u(i) * v(j);
  return r;
}

}  // namespace spectral3
