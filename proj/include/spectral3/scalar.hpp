#pragma once

#include <cmath>
#include <utility>
#include <variant>

namespace spectral3 {

/// Error conditions surfaced by the decomposition pipeline.
enum class Error {
  SingularMatrix,
  NonRealSpectrum,
  DegenerateSpectrum,
  DegenerateGradient,
  InvalidArgument,
};

inline const char* to_string(Error e) {
  switch (e) {
    case Error::SingularMatrix: return "SingularMatrix";
    case Error::NonRealSpectrum: return "NonRealSpectrum";
    case Error::DegenerateSpectrum: return "DegenerateSpectrum";
    case Error::DegenerateGradient: return "DegenerateGradient";
    case Error::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

/// Value-or-error result. Deliberately minimal; the library never throws
/// for spectrum-related failures.
template <typename T>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}
  Result(Error e) : v_(e) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& operator*() const { return std::get<T>(v_); }
  T& operator*() { return std::get<T>(v_); }
  const T* operator->() const { return &std::get<T>(v_); }
  T* operator->() { return &std::get<T>(v_); }
  const T& value() const { return std::get<T>(v_); }

  Error error() const { return std::get<Error>(v_); }

 private:
  std::variant<T, Error> v_;
};

/// Scalar constants that must be supplied per scalar type so that extended
/// precision types keep their full accuracy.
template <typename T>
struct Constants;

template <>
struct Constants<double> {
  static double pi() { return 3.141592653589793; }
  static double epsilon() { return 2.220446049250313e-16; }
};

/// sign(x) in {-1, 0, +1}, expressed in the scalar type itself.
template <typename T>
T sign(const T& x) {
  if (x > T(0)) return T(1);
  if (x < T(0)) return T(-1);
  return T(0);
}

inline double to_double(double x) { return x; }

}  // namespace spectral3
