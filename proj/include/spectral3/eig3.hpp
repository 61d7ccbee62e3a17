#pragma once

#include <array>
#include <cmath>

#include "spectral3/invariants.hpp"
#include "spectral3/mat3.hpp"

namespace spectral3 {

/// How the angle of the trigonometric root formula is evaluated.
/// Arctan is the default: it is total at Delta_q = 0 and, combined with the
/// sum-of-products discriminant, keeps full accuracy near Delta = 0.
enum class AngleMethod { Arccos, Arctan, Series };

inline const char* to_string(AngleMethod m) {
  switch (m) {
    case AngleMethod::Arccos: return "arccos";
    case AngleMethod::Arctan: return "arctan";
    default: return "series";
  }
}

enum class Multiplicity { Distinct, DoubleLow, DoubleHigh, Triple };

inline const char* to_string(Multiplicity m) {
  switch (m) {
    case Multiplicity::Distinct: return "Distinct";
    case Multiplicity::DoubleLow: return "DoubleLow";
    case Multiplicity::DoubleHigh: return "DoubleHigh";
    default: return "Triple";
  }
}

struct ClassifyThresholds {
  // Multiplicity classification floors, applied to Delta_p / scale^2 and
  // Delta / scale^6 (roughly epsilon^2).
  double tau_p = 1e-24;
  double tau_delta = 1e-24;
  // Negative-value clamping floors. Wider than the classification floors:
  // the naive discriminant carries O(eps * scale^6) noise of either sign,
  // while genuine complex spectra violate by orders of magnitude more.
  double tau_clamp_p = 1e-12;
  double tau_clamp_delta = 1e-12;
};

struct DecompOptions {
  InvariantRoute route = InvariantRoute::Sop;
  AngleMethod angle_method = AngleMethod::Arctan;
  ClassifyThresholds thresholds{};
};

template <typename T>
struct EigenTriple {
  std::array<T, 3> lambda;  // ascending
  T phi;                    // in [0, pi/3]
  Multiplicity multiplicity;
};

/// phi in [0, pi/3] from the discriminant (>= 0) and Delta_q.
template <typename T>
Result<T> angle(const T& delta, const T& delta_q, AngleMethod method) {
  using std::sqrt;
  using std::acos;
  using std::atan2;
  switch (method) {
    case AngleMethod::Arctan: {
      // atan2 absorbs the sign(Delta_q) shift of the arctan identity and is
      // total at Delta_q = 0.
      T y = sqrt(T(27) * delta);
      if (to_double(y) == 0.0 && to_double(delta_q) == 0.0) return T(0);
      return atan2(y, delta_q) / T(3);
    }
    case AngleMethod::Arccos: {
      T den = sqrt(delta_q * delta_q + T(27) * delta);
      if (to_double(den) == 0.0) return T(0);
      T arg = delta_q / den;
      if (arg > T(1)) arg = T(1);
      if (arg < T(-1)) arg = T(-1);
      return acos(arg) / T(3);
    }
    case AngleMethod::Series: {
      // Puiseux expansion about Delta = 0; valid only for 27 Delta <= Dq^2.
      if (to_double(T(27) * delta) > to_double(delta_q * delta_q)) {
        return Error::InvalidArgument;
      }
      if (to_double(delta_q) == 0.0) {
        // Only reachable with Delta = 0; phi is immaterial (Delta_p = 0).
        return acos(T(0)) / T(3);
      }
      T base = acos(sign(delta_q));
      T rt3 = sqrt(T(3));
      T t = sqrt(delta);
      T u = t / delta_q;
      T u3 = u * u * u;
      T u5 = u3 * u * u;
      T bracket = base + T(3) * rt3 * u - T(27) * rt3 * u3 +
                  T(2187) * rt3 * u5 / T(5);
      return bracket / T(3);
    }
  }
  return Error::InvalidArgument;
}

/// lambda_k = 1/3 [I1 + 2 sqrt(Delta_p) cos(phi + 2 pi k / 3)], k = 1,2,3.
/// For phi in [0, pi/3] the output is ascending by construction.
template <typename T>
std::array<T, 3> eigenvalues3(const T& i1, const T& delta_p, const T& phi) {
  using std::sqrt;
  using std::cos;
  T r = T(2) * sqrt(delta_p);
  T third_tau = T(2) * Constants<T>::pi() / T(3);
  std::array<T, 3> lam;
  for (int k = 1; k <= 3; ++k) {
    T arg = phi + T(k) * third_tau;
    lam[static_cast<std::size_t>(k - 1)] = (i1 + r * cos(arg)) / T(3);
  }
  return lam;
}

/// Multiplicity from the (possibly clamped) invariants. Delta_q selects the
/// degenerate side: positive means the repeated pair sits at the bottom.
inline Multiplicity classify_multiplicity(double delta, double delta_q,
                                          double delta_p, double scale,
                                          const ClassifyThresholds& thr = {}) {
  double s2 = scale * scale;
  double s6 = s2 * s2 * s2;
  if (delta_p <= thr.tau_p * s2) return Multiplicity::Triple;
  if (delta <= thr.tau_delta * s6) {
    if (delta_q > 0.0) return Multiplicity::DoubleLow;
    return Multiplicity::DoubleHigh;
  }
  return Multiplicity::Distinct;
}

namespace detail_eig {

// Clamps a slightly negative invariant to zero; beyond the floor the value
// signals a complex pair. Returns false on violation.
template <typename T>
bool clamp_nonnegative(T& value, double floor) {
  double v = to_double(value);
  if (v >= 0.0) return true;
  if (v >= -floor) {
    value = T(0);
    return true;
  }
  return false;
}

}  // namespace detail_eig

/// Full eigenvalue pipeline: invariants by the chosen route, clamping,
/// multiplicity classification, angle, and the trigonometric closed form.
template <typename T>
Result<EigenTriple<T>> eigenvalues(const Mat3<T>& a, const DecompOptions& opt = {}) {
  double scale = to_double(max_abs(a));
  double s2 = scale * scale;
  double s6 = s2 * s2 * s2;

  PrincipalInvariants<T> inv = principal_invariants(a);
  DerivedInvariants<T> der = derived_invariants(a, opt.route);

  if (!detail_eig::clamp_nonnegative(der.delta_p, opt.thresholds.tau_clamp_p * s2)) {
    return Error::NonRealSpectrum;
  }
  if (!detail_eig::clamp_nonnegative(der.delta, opt.thresholds.tau_clamp_delta * s6)) {
    return Error::NonRealSpectrum;
  }

  Multiplicity mult =
      classify_multiplicity(to_double(der.delta), to_double(der.delta_q),
                            to_double(der.delta_p), scale, opt.thresholds);

  Result<T> phi = angle(der.delta, der.delta_q, opt.angle_method);
  if (!phi.ok()) return phi.error();

  return EigenTriple<T>{eigenvalues3(inv.i1, der.delta_p, *phi), *phi, mult};
}

}  // namespace spectral3
