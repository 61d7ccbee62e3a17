#pragma once

#include <cassert>
#include <cmath>
#include <ostream>

#include "spectral3/scalar.hpp"

namespace spectral3 {

/// Double-double scalar: an unevaluated sum hi + lo with |lo| <= 1/2 ulp(hi),
/// giving roughly 106 bits of significand. Used as the extended-precision
/// oracle for error measurements. Arithmetic follows the usual error-free
/// transformation recipes (two_sum / fma-based two_prod).
class DDouble {
 public:
  DDouble() : hi_(0.0), lo_(0.0) {}
  DDouble(double x) : hi_(x), lo_(0.0) {}
  DDouble(int x) : hi_(static_cast<double>(x)), lo_(0.0) {}
  DDouble(double hi, double lo) : hi_(hi), lo_(lo) {}

  double hi() const { return hi_; }
  double lo() const { return lo_; }

  friend DDouble operator+(const DDouble& a, const DDouble& b) {
    double s1, e1, s2, e2;
    two_sum(a.hi_, b.hi_, s1, e1);
    two_sum(a.lo_, b.lo_, s2, e2);
    e1 += s2;
    quick_two_sum(s1, e1, s1, e1);
    e1 += e2;
    quick_two_sum(s1, e1, s1, e1);
    return DDouble(s1, e1);
  }

  friend DDouble operator-(const DDouble& a) { return DDouble(-a.hi_, -a.lo_); }
  friend DDouble operator-(const DDouble& a, const DDouble& b) { return a + (-b); }

  friend DDouble operator*(const DDouble& a, const DDouble& b) {
    double p, e;
    two_prod(a.hi_, b.hi_, p, e);
    e += a.hi_ * b.lo_ + a.lo_ * b.hi_;
    quick_two_sum(p, e, p, e);
    return DDouble(p, e);
  }

  friend DDouble operator/(const DDouble& a, const DDouble& b) {
    double q1 = a.hi_ / b.hi_;
    DDouble r = a - DDouble(q1) * b;
    double q2 = r.hi_ / b.hi_;
    r = r - DDouble(q2) * b;
    double q3 = r.hi_ / b.hi_;
    double s, e;
    quick_two_sum(q1, q2, s, e);
    DDouble q(s, e);
    return q + DDouble(q3);
  }

  DDouble& operator+=(const DDouble& b) { return *this = *this + b; }
  DDouble& operator-=(const DDouble& b) { return *this = *this - b; }
  DDouble& operator*=(const DDouble& b) { return *this = *this * b; }
  DDouble& operator/=(const DDouble& b) { return *this = *this / b; }

  friend bool operator==(const DDouble& a, const DDouble& b) {
    return a.hi_ == b.hi_ && a.lo_ == b.lo_;
  }
  friend bool operator<(const DDouble& a, const DDouble& b) {
    return a.hi_ < b.hi_ || (a.hi_ == b.hi_ && a.lo_ < b.lo_);
  }
  friend bool operator>(const DDouble& a, const DDouble& b) { return b < a; }
  friend bool operator<=(const DDouble& a, const DDouble& b) { return !(b < a); }
  friend bool operator>=(const DDouble& a, const DDouble& b) { return !(a < b); }
  friend bool operator!=(const DDouble& a, const DDouble& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const DDouble& x) {
    return os << "dd(" << x.hi_ << ", " << x.lo_ << ")";
  }

 private:
  static void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    double bb = s - a;
    e = (a - (s - bb)) + (b - bb);
  }
  static void quick_two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    e = b - (s - a);
  }
  static void two_prod(double a, double b, double& p, double& e) {
    p = a * b;
    e = std::fma(a, b, -p);
  }

  double hi_;
  double lo_;
};

inline double to_double(const DDouble& x) { return x.hi() + x.lo(); }

inline DDouble abs(const DDouble& x) { return x.hi() < 0.0 ? -x : x; }

inline DDouble sqrt(const DDouble& x) {
  if (x.hi() == 0.0 && x.lo() == 0.0) return DDouble(0.0);
  assert(x.hi() > 0.0 && "sqrt of negative DDouble");
  // One Newton correction on top of the double estimate.
  double y0 = std::sqrt(x.hi());
  DDouble r = x - DDouble(y0) * DDouble(y0);
  return DDouble(y0) + r / (DDouble(2.0) * DDouble(y0));
}

namespace detail_dd {

inline const DDouble kPi(3.141592653589793, 1.2246467991473532e-16);
inline const DDouble kHalfPi(1.5707963267948966, 6.123233995736766e-17);

// Taylor kernels valid for |r| <~ pi/4 + reduction slack.
inline DDouble sin_kernel(const DDouble& r) {
  DDouble term = r;
  DDouble sum = r;
  DDouble r2 = r * r;
  for (int k = 3; k <= 31; k += 2) {
    term = term * r2 / DDouble(static_cast<double>(-k * (k - 1)));
    sum += term;
    if (std::abs(term.hi()) < 1e-36) break;
  }
  return sum;
}

inline DDouble cos_kernel(const DDouble& r) {
  DDouble term(1.0);
  DDouble sum(1.0);
  DDouble r2 = r * r;
  for (int k = 2; k <= 32; k += 2) {
    term = term * r2 / DDouble(static_cast<double>(-k * (k - 1)));
    sum += term;
    if (std::abs(term.hi()) < 1e-36) break;
  }
  return sum;
}

// Reduces x to r = x - q*pi/2 with |r| <= pi/4 and returns q mod 4.
inline int reduce_half_pi(const DDouble& x, DDouble& r) {
  double q = std::round(to_double(x) / to_double(kHalfPi));
  r = x - DDouble(q) * kHalfPi;
  int j = static_cast<int>(std::fmod(q, 4.0));
  if (j < 0) j += 4;
  return j;
}

}  // namespace detail_dd

inline void sin_cos(const DDouble& x, DDouble& s, DDouble& c) {
  DDouble r;
  int j = detail_dd::reduce_half_pi(x, r);
  DDouble sr = detail_dd::sin_kernel(r);
  DDouble cr = detail_dd::cos_kernel(r);
  switch (j) {
    case 0: s = sr;  c = cr;  break;
    case 1: s = cr;  c = -sr; break;
    case 2: s = -sr; c = -cr; break;
    default: s = -cr; c = sr; break;
  }
}

inline DDouble sin(const DDouble& x) {
  DDouble s, c;
  sin_cos(x, s, c);
  return s;
}

inline DDouble cos(const DDouble& x) {
  DDouble s, c;
  sin_cos(x, s, c);
  return c;
}

/// atan2 over [-pi, pi]: working-precision estimate plus one correction step
/// through the extended-precision sine/cosine.
inline DDouble atan2(const DDouble& y, const DDouble& x) {
  double yd = to_double(y);
  double xd = to_double(x);
  if (yd == 0.0 && y.hi() == 0.0 && y.lo() == 0.0 && x.hi() == 0.0 && x.lo() == 0.0) {
    return DDouble(0.0);
  }
  double t0 = std::atan2(yd, xd);
  DDouble s, c;
  sin_cos(DDouble(t0), s, c);
  DDouble num = y * c - x * s;
  DDouble den = x * c + y * s;
  return DDouble(t0) + num / den;
}

inline DDouble acos(const DDouble& x) {
  DDouble xc = x;
  if (xc > DDouble(1.0)) xc = DDouble(1.0);
  if (xc < DDouble(-1.0)) xc = DDouble(-1.0);
  DDouble s = sqrt((DDouble(1.0) - xc) * (DDouble(1.0) + xc));
  return atan2(s, xc);
}

template <>
struct Constants<DDouble> {
  static DDouble pi() { return detail_dd::kPi; }
  static DDouble epsilon() { return DDouble(2.4651903288156619e-32); }  // 2^-105
};

}  // namespace spectral3
