#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "spectral3/scalar.hpp"

namespace spectral3 {

/// Forward-mode dual number carrying a 9-component gradient, one slot per
/// entry of a 3x3 matrix (row-major: slot 3*i + j holds d/dA_ij). Arithmetic
/// applies the product and chain rules exactly at the value level, so
/// instantiating the eigenvalue pipeline over Dual yields eigenvalue
/// derivatives with no extra transcription step.
struct Dual {
  double v = 0.0;
  std::array<double, 9> d{};

  Dual() = default;
  Dual(double x) : v(x) {}
  Dual(int x) : v(static_cast<double>(x)) {}
  Dual(double x, const std::array<double, 9>& g) : v(x), d(g) {}

  /// Value x with a unit derivative in gradient slot `slot`.
  static Dual seeded(double x, int slot) {
    Dual r(x);
    r.d[static_cast<std::size_t>(slot)] = 1.0;
    return r;
  }

  bool gradient_is_zero() const {
    for (double g : d) {
      if (g != 0.0) return false;
    }
    return true;
  }

  bool gradient_is_finite() const {
    for (double g : d) {
      if (!std::isfinite(g)) return false;
    }
    return true;
  }

  friend Dual operator+(const Dual& a, const Dual& b) {
    Dual r(a.v + b.v);
    for (int i = 0; i < 9; ++i) r.d[i] = a.d[i] + b.d[i];
    return r;
  }
  friend Dual operator-(const Dual& a, const Dual& b) {
    Dual r(a.v - b.v);
    for (int i = 0; i < 9; ++i) r.d[i] = a.d[i] - b.d[i];
    return r;
  }
  friend Dual operator-(const Dual& a) {
    Dual r(-a.v);
    for (int i = 0; i < 9; ++i) r.d[i] = -a.d[i];
    return r;
  }
  friend Dual operator*(const Dual& a, const Dual& b) {
    Dual r(a.v * b.v);
    for (int i = 0; i < 9; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
    return r;
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    Dual r(a.v / b.v);
    double inv2 = 1.0 / (b.v * b.v);
    for (int i = 0; i < 9; ++i) r.d[i] = (a.d[i] * b.v - a.v * b.d[i]) * inv2;
    return r;
  }

  Dual& operator+=(const Dual& b) { return *this = *this + b; }
  Dual& operator-=(const Dual& b) { return *this = *this - b; }
  Dual& operator*=(const Dual& b) { return *this = *this * b; }
  Dual& operator/=(const Dual& b) { return *this = *this / b; }

  friend bool operator==(const Dual& a, const Dual& b) { return a.v == b.v; }
  friend bool operator!=(const Dual& a, const Dual& b) { return a.v != b.v; }
  friend bool operator<(const Dual& a, const Dual& b) { return a.v < b.v; }
  friend bool operator>(const Dual& a, const Dual& b) { return a.v > b.v; }
  friend bool operator<=(const Dual& a, const Dual& b) { return a.v <= b.v; }
  friend bool operator>=(const Dual& a, const Dual& b) { return a.v >= b.v; }
};

inline double to_double(const Dual& x) { return x.v; }

inline Dual abs(const Dual& x) { return x.v < 0.0 ? -x : x; }

inline Dual sqrt(const Dual& x) {
  double s = std::sqrt(x.v);
  Dual r(s);
  if (x.v == 0.0 && x.gradient_is_zero()) return r;  // constant zero stays constant
  double inv = 0.5 / s;
  for (int i = 0; i < 9; ++i) r.d[i] = x.d[i] * inv;
  return r;
}

inline Dual cos(const Dual& x) {
  Dual r(std::cos(x.v));
  double ds = -std::sin(x.v);
  for (int i = 0; i < 9; ++i) r.d[i] = ds * x.d[i];
  return r;
}

inline Dual acos(const Dual& x) {
  Dual r(std::acos(x.v));
  if (x.gradient_is_zero()) return r;
  double ds = -1.0 / std::sqrt(1.0 - x.v * x.v);
  for (int i = 0; i < 9; ++i) r.d[i] = ds * x.d[i];
  return r;
}

/// Total derivative (x dy - y dx) / (x^2 + y^2).
inline Dual atan2(const Dual& y, const Dual& x) {
  Dual r(std::atan2(y.v, x.v));
  double inv = 1.0 / (x.v * x.v + y.v * y.v);
  for (int i = 0; i < 9; ++i) r.d[i] = (x.v * y.d[i] - y.v * x.d[i]) * inv;
  return r;
}

template <>
struct Constants<Dual> {
  static Dual pi() { return Dual(Constants<double>::pi()); }
  static Dual epsilon() { return Dual(Constants<double>::epsilon()); }
};

}  // namespace spectral3
