#pragma once

#include <cmath>
#include <vector>

#include "spectral3/dual.hpp"
#include "spectral3/eig3.hpp"

namespace spectral3 {

struct ProjectorEntry {
  double lambda;
  Mat3<double> projector;
  int multiplicity;  // algebraic multiplicity of lambda
};

/// Eigenvalues paired with eigenprojectors. Distinct spectra carry three
/// rank-1 entries; a double eigenvalue carries the simple projector plus the
/// rank-2 complement; a triple eigenvalue carries (lambda, I).
struct Projectors {
  std::vector<ProjectorEntry> entries;
  Multiplicity multiplicity = Multiplicity::Distinct;

  Mat3<double> sum() const {
    Mat3<double> s = Mat3<double>::zero();
    for (const auto& e : entries) s = s + e.projector;
    return s;
  }

  Mat3<double> reconstruct() const {
    Mat3<double> s = Mat3<double>::zero();
    for (const auto& e : entries) s = s + e.lambda * e.projector;
    return s;
  }
};

namespace detail_proj {

// E_k^T = d(lambda_k)/dA: the projector is the transposed gradient.
inline Mat3<double> gradient_projector(const Dual& lambda) {
  Mat3<double> e;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      e(i, j) = lambda.d[static_cast<std::size_t>(3 * j + i)];
  return e;
}

inline Mat3<Dual> seed_matrix(const Mat3<double>& a) {
  Mat3<Dual> d;
  for (int i = 0; i < 9; ++i) d.e[i] = Dual::seeded(a.e[i], i);
  return d;
}

}  // namespace detail_proj

/// Lagrange-interpolant (Frobenius covariant) projectors for strictly
/// distinct eigenvalues, generic over the scalar type.
template <typename T>
std::array<Mat3<T>, 3> frobenius_covariants(const Mat3<T>& a,
                                            const std::array<T, 3>& lambda) {
  std::array<Mat3<T>, 3> e;
  Mat3<T> ident = Mat3<T>::identity();
  for (int k = 0; k < 3; ++k) {
    Mat3<T> p = ident;
    for (int i = 0; i < 3; ++i) {
      if (i == k) continue;
      T scale = T(1) / (lambda[static_cast<std::size_t>(k)] - lambda[static_cast<std::size_t>(i)]);
      Mat3<T> factor = a;
      for (int m = 0; m < 3; ++m) {
        factor(m, m) = factor(m, m) - lambda[static_cast<std::size_t>(i)];
      }
      for (int m = 0; m < 9; ++m) factor.e[m] = factor.e[m] * scale;
      p = mat_mul(p, factor);
    }
    e[static_cast<std::size_t>(k)] = p;
  }
  return e;
}

/// Projectors via differentiation through the eigenvalue: the whole
/// sum-of-products pipeline is evaluated over dual scalars and each E_k is
/// read off as the transposed gradient of lambda_k.
inline Result<Projectors> projectors_dual(const Mat3<double>& a,
                                          const DecompOptions& opt = {}) {
  Result<EigenTriple<double>> base = eigenvalues(a, opt);
  if (!base.ok()) return base.error();
  Multiplicity mult = base->multiplicity;

  if (mult == Multiplicity::Triple) {
    double lam = trace(a) / 3.0;
    return Projectors{{{lam, Mat3<double>::identity(), 3}}, mult};
  }

  Mat3<Dual> ad = detail_proj::seed_matrix(a);
  PrincipalInvariants<Dual> inv = principal_invariants(ad);
  DerivedInvariants<Dual> der = derived_invariants(ad, opt.route);

  double scale = to_double(max_abs(a));
  double s2 = scale * scale;
  double s6 = s2 * s2 * s2;
  detail_eig::clamp_nonnegative(der.delta_p, opt.thresholds.tau_clamp_p * s2);
  detail_eig::clamp_nonnegative(der.delta, opt.thresholds.tau_clamp_delta * s6);

  if (mult != Multiplicity::Distinct) {
    // Degenerate pair: sqrt(Delta) is not differentiable at Delta = 0, but
    // the simple eigenvalue's total derivative loses no first-order term
    // when Delta is frozen at zero (its phi-sensitivity vanishes there).
    der.delta = Dual(0.0);
  }

  Result<Dual> phi = angle(der.delta, der.delta_q, opt.angle_method);
  if (!phi.ok()) return phi.error();
  std::array<Dual, 3> lam = eigenvalues3(inv.i1, der.delta_p, *phi);

  if (mult == Multiplicity::Distinct) {
    Projectors out;
    out.multiplicity = mult;
    for (int k = 0; k < 3; ++k) {
      if (!lam[static_cast<std::size_t>(k)].gradient_is_finite()) {
        return Error::DegenerateGradient;
      }
      out.entries.push_back({lam[static_cast<std::size_t>(k)].v,
                             detail_proj::gradient_projector(lam[static_cast<std::size_t>(k)]),
                             1});
    }
    return out;
  }

  // Double eigenvalue: gradient-projector for the simple one, complement for
  // the repeated pair (individual projectors in the cluster are not unique).
  std::size_t simple = (mult == Multiplicity::DoubleLow) ? 2 : 0;
  std::size_t repeated = (simple == 2) ? 0 : 2;
  const Dual& ls = lam[simple];
  if (!ls.gradient_is_finite()) return Error::DegenerateGradient;
  Mat3<double> es = detail_proj::gradient_projector(ls);
  Projectors out;
  out.multiplicity = mult;
  ProjectorEntry simple_entry{ls.v, es, 1};
  ProjectorEntry merged{lam[repeated].v, Mat3<double>::identity() - es, 2};
  if (mult == Multiplicity::DoubleLow) {
    out.entries.push_back(merged);
    out.entries.push_back(simple_entry);
  } else {
    out.entries.push_back(simple_entry);
    out.entries.push_back(merged);
  }
  return out;
}

/// Frobenius covariants with a gap check; strictly distinct input only.
inline Result<Projectors> projectors_frobenius(const Mat3<double>& a,
                                               const std::array<double, 3>& lambda,
                                               double gap_floor_rel = 1e-12) {
  double scale = to_double(max_abs(a));
  double floor = gap_floor_rel * scale;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(lambda[static_cast<std::size_t>(i)] -
                   lambda[static_cast<std::size_t>(j)]) <= floor)
        return Error::DegenerateSpectrum;
  std::array<Mat3<double>, 3> e = frobenius_covariants(a, lambda);
  Projectors out;
  out.multiplicity = Multiplicity::Distinct;
  for (int k = 0; k < 3; ++k)
    out.entries.push_back({lambda[static_cast<std::size_t>(k)],
                           e[static_cast<std::size_t>(k)], 1});
  return out;
}

/// Sylvester matrix function f(A) = sum f(lambda_k) E_k; repeated eigenvalues
/// use the merged invariant-subspace projectors.
template <typename F>
Result<Mat3<double>> matrix_function(const Mat3<double>& a, F&& f,
                                     const DecompOptions& opt = {}) {
  Result<Projectors> p = projectors_dual(a, opt);
  if (!p.ok()) return p.error();
  Mat3<double> r = Mat3<double>::zero();
  for (const auto& entry : p->entries) {
    r = r + f(entry.lambda) * entry.projector;
  }
  return r;
}

}  // namespace spectral3
