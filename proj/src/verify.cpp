#include "spectral3/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spectral3/bench.hpp"
#include "spectral3/ddouble.hpp"
#include "spectral3/dual.hpp"
#include "spectral3/eig3.hpp"
#include "spectral3/invariants.hpp"
#include "spectral3/oracle.hpp"
#include "spectral3/projectors.hpp"
#include "spectral3/sampling.hpp"

namespace spectral3 {

namespace {

constexpr double kEps = 2.220446049250313e-16;

struct Suite {
  std::uint64_t seed;
  int trials;
  std::vector<PropertyResult> results;

  // Records the worst violation-to-threshold ratio across trials (thresholds
  // are per-trial because they scale with the sampled matrix); <= 1 passes.
  void check(const std::string& name, double violation, double threshold) {
    double ratio;
    if (threshold > 0.0) {
      ratio = violation / threshold;
    } else {
      ratio = violation == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    auto it = std::find_if(results.begin(), results.end(),
                           [&](const PropertyResult& r) { return r.name == name; });
    if (it == results.end()) {
      results.push_back({name, ratio, 1.0, ratio <= 1.0});
      return;
    }
    it->max_violation = std::max(it->max_violation, ratio);
    it->passed = it->max_violation <= 1.0;
  }
};

double dd_rel_diff(const DDouble& a, const DDouble& b, double abs_floor) {
  double d = std::abs(to_double(a - b));
  double m = std::max({std::abs(to_double(a)), std::abs(to_double(b)), abs_floor});
  return d / m;
}

Mat3<DDouble> to_dd(const Mat3<double>& a) {
  return Mat3<DDouble>::from(a, [](double x) { return DDouble(x); });
}

void mat3_properties(Suite& s) {
  Sampler rng(s.seed ^ 0x11);
  for (int t = 0; t < s.trials; ++t) {
    Mat3<double> a = rng.matrix(-3.0, 3.0);
    Mat3<double> b = rng.matrix(-3.0, 3.0);
    double na = max_abs(a), nb = max_abs(b);
    double err = std::abs(trace(mat_mul(a, b)) - trace(mat_mul(b, a)));
    s.check("mat3.trace_commutativity", err, 8.0 * kEps * na * nb);

    // Dual value parts are bit-identical to the double computation.
    Mat3<Dual> ad = Mat3<Dual>::from(a, [](double x) { return Dual(x); });
    Mat3<Dual> bd = Mat3<Dual>::from(b, [](double x) { return Dual(x); });
    Mat3<Dual> pd = mat_mul(ad, bd);
    Mat3<double> p = mat_mul(a, b);
    double mismatch = 0.0;
    for (int i = 0; i < 9; ++i) {
      if (pd.e[i].v != p.e[i]) mismatch = 1.0;
    }
    if (det3(ad).v != det3(a) || trace(ad).v != trace(a)) mismatch = 1.0;
    s.check("mat3.dual_value_bitwise", mismatch, 0.0);

    // Fixed association: mat_pow is left multiplication by definition.
    Mat3<double> p4 = mat_pow(a, 4);
    Mat3<double> p4b = mat_mul(a, mat_mul(a, mat_mul(a, mat_mul(a, Mat3<double>::identity()))));
    double bitdiff = (p4 == p4b) ? 0.0 : 1.0;
    s.check("mat3.pow_association", bitdiff, 0.0);
  }
}

void invariant_route_agreement(Suite& s) {
  Sampler rng(s.seed ^ 0x22);
  for (int t = 0; t < s.trials; ++t) {
    Mat3<double> a = rng.integer_matrix(-5, 5);
    Mat3<DDouble> ad = to_dd(a);
    double scale6 = std::pow(std::max(1.0, max_abs(a)), 6);
    DDouble naive = discriminant_naive(principal_invariants(ad));
    DDouble sop = discriminant_sop(ad);
    DDouble gram = discriminant_gram(ad);
    double floor = 1e-20 * scale6;
    s.check("invariants.naive_vs_sop_dd", dd_rel_diff(naive, sop, floor), 1e-25);
    s.check("invariants.naive_vs_gram_dd", dd_rel_diff(naive, gram, floor), 1e-25);

    // Eigenvalue-product identity, on real spectra only.
    if (to_double(sop) > 1e-6 * scale6) {
      Result<GroundTruth> gt = reference_invariants(a);
      if (gt.ok()) {
        DDouble prod(1.0);
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j) {
            DDouble d = gt->lambda[static_cast<std::size_t>(i)] -
                        gt->lambda[static_cast<std::size_t>(j)];
            prod *= d * d;
          }
        s.check("invariants.discriminant_vs_eigengaps_dd",
                dd_rel_diff(sop, prod, floor), 1e-25);
      }
    }
  }
}

void subdiscriminant_identities(Suite& s) {
  Sampler rng(s.seed ^ 0x33);
  for (int t = 0; t < s.trials; ++t) {
    Mat3<double> a = rng.matrix(-2.0, 2.0);
    double scale = std::max(max_abs(a), 0.5);
    PrincipalInvariants<double> inv = principal_invariants(a);
    auto [dp, dq] = delta_pq_naive(inv);

    double e1 = std::abs(subdiscriminant(a, {0}, {1}) - inv.i1);
    s.check("invariants.subdisc_01_is_trace", e1, 32.0 * kEps * scale);

    double e2 = std::abs(subdiscriminant(a, {0, 1}, {0, 1}) - 2.0 * dp);
    s.check("invariants.subdisc_0101_is_2dp", e2, 32.0 * kEps * scale * scale);

    // The identity cancels at the magnitude of the Gram intermediates
    // (3 tr(A^3), tr(A^2) tr(A), I1 Delta_p), not at scale^3, so the bound
    // uses the largest of those.
    double sub = subdiscriminant(a, {0, 1}, {0, 2});
    double e3 = std::abs(3.0 * sub - 4.0 * inv.i1 * dp - dq);
    double tr2 = trace(mat_pow(a, 2));
    double tr3 = trace(mat_pow(a, 3));
    double i1 = inv.i1;
    double mag = std::max({std::abs(3.0 * tr3), std::abs(tr2 * i1),
                           std::abs(4.0 * i1 * dp), std::abs(dq),
                           std::abs(2.0 * i1 * i1 * i1), std::abs(9.0 * i1 * inv.i2),
                           std::abs(27.0 * inv.i3), scale * scale * scale});
    s.check("invariants.subdisc_deltaq", e3, 32.0 * kEps * mag);
  }
}

void sop_structure(Suite& s) {
  Sampler rng(s.seed ^ 0x44);
  for (int t = 0; t < s.trials; ++t) {
    // Symmetric input: x and y coincide and the discriminant is a weighted
    // sum of squares.
    Mat3<double> sym = rng.symmetric_matrix(-2.0, 2.0);
    double scale3 = std::pow(std::max(max_abs(sym), 0.5), 3);
    auto x = sop_x(sym);
    auto y = sop_y(sym);
    for (int m = 0; m < 14; ++m) {
      s.check("invariants.symmetric_x_equals_y", std::abs(x[m] - y[m]),
              8.0 * kEps * scale3);
    }
    s.check("invariants.symmetric_sop_nonnegative",
            std::max(0.0, -discriminant_sop(sym)),
            64.0 * kEps * scale3 * scale3);

    // Repeated eigenvalue built from an exact rational transform: every
    // factor is at noise level.
    Mat3<double> u = rng.rational_transform();
    double lam = static_cast<double>(rng.uniform_int(-2, 2));
    double mu = lam + static_cast<double>(rng.uniform_int(1, 3));
    Mat3<double> ad = mat_mul(mat_mul(u, Mat3<double>::diagonal(lam, lam, mu)),
                              *inverse(u));
    double rep_scale3 = std::pow(std::max(max_abs(ad), 1.0), 3);
    auto xr = sop_x(ad);
    auto yr = sop_y(ad);
    for (int m = 0; m < 14; ++m) {
      double worst = std::max(std::abs(xr[m]), std::abs(yr[m]));
      s.check("invariants.zero_at_multiplicity", worst, 64.0 * kEps * rep_scale3);
    }

    // Scaling laws Delta ~ s^6, Delta_p ~ s^2, Delta_q ~ s^3, checked as
    // absolute bounds at the rounding level of each evaluation (the values
    // themselves may sit arbitrarily close to zero).
    Mat3<double> b = rng.matrix(-2.0, 2.0);
    double sc = rng.uniform(0.3, 3.0);
    Mat3<double> sb = sc * b;
    double s2 = sc * sc, s3 = s2 * sc, s6 = s3 * s3;
    double mb = std::max(max_abs(b), 0.5);
    double mb3 = mb * mb * mb;
    s.check("invariants.scaling_delta",
            std::abs(discriminant_sop(sb) - s6 * discriminant_sop(b)),
            1024.0 * kEps * s6 * mb3 * mb3);
    s.check("invariants.scaling_deltap",
            std::abs(deltap_sop(sb) - s2 * deltap_sop(b)),
            64.0 * kEps * s2 * mb * mb);
    s.check("invariants.scaling_deltaq",
            std::abs(deltaq_subdisc(sb) - s3 * deltaq_subdisc(b)),
            512.0 * kEps * s3 * mb3);

    // Similarity invariance of sub-discriminants in extended precision. The
    // conjugation itself rounds at double-double precision, so the bound is
    // absolute at that level times the intermediate magnitude.
    Mat3<DDouble> cd = to_dd(rng.integer_matrix(-3, 3));
    Mat3<DDouble> ud = to_dd(rng.rational_transform());
    Mat3<DDouble> conj = mat_mul(mat_mul(ud, cd), *inverse(ud));
    double cmag = std::max(to_double(max_abs(conj)), 1.0);
    double cmag3 = cmag * cmag * cmag;
    s.check("invariants.similarity_subdisc_0102",
            std::abs(to_double(subdiscriminant(cd, {0, 1}, {0, 2}) -
                               subdiscriminant(conj, {0, 1}, {0, 2}))),
            1e-26 * cmag3);
    s.check("invariants.similarity_discriminant",
            std::abs(to_double(discriminant_gram(cd) - discriminant_gram(conj))),
            1e-26 * cmag3 * cmag3);
  }
}

void eig_properties(Suite& s) {
  Sampler rng(s.seed ^ 0x55);
  for (int t = 0; t < s.trials; ++t) {
    std::array<double, 3> lam;
    Mat3<double> a = rng.real_spectrum_matrix(0.05, &lam);
    double scale = max_abs(a);
    double scale6 = std::pow(scale, 6);

    DecompOptions arctan_opt;  // sop + arctan
    DecompOptions arccos_opt;
    arccos_opt.angle_method = AngleMethod::Arccos;
    Result<EigenTriple<double>> e1 = eigenvalues(a, arctan_opt);
    Result<EigenTriple<double>> e2 = eigenvalues(a, arccos_opt);
    if (e1.ok() && e2.ok() && discriminant_sop(a) > 1e-6 * scale6) {
      s.check("eig3.angle_method_agreement", std::abs(e1->phi - e2->phi), 16.0 * kEps);
      for (int k = 0; k < 3; ++k) {
        s.check("eig3.eigenvalue_method_agreement",
                std::abs(e1->lambda[static_cast<std::size_t>(k)] -
                         e2->lambda[static_cast<std::size_t>(k)]),
                64.0 * kEps * scale);
      }
    }

    if (e1.ok()) {
      // Ascending order is a theorem for phi in [0, pi/3].
      double order = std::max(
          {e1->lambda[0] - e1->lambda[1], e1->lambda[1] - e1->lambda[2], 0.0});
      s.check("eig3.ascending_order", order, 0.0);

      // Vieta residuals against the principal invariants.
      PrincipalInvariants<double> inv = principal_invariants(a);
      const auto& l = e1->lambda;
      double v1 = std::abs(l[0] + l[1] + l[2] - inv.i1);
      double v2 = std::abs(l[0] * l[1] + l[0] * l[2] + l[1] * l[2] - inv.i2);
      double v3 = std::abs(l[0] * l[1] * l[2] - inv.i3);
      s.check("eig3.vieta_i1", v1, 128.0 * kEps * scale);
      s.check("eig3.vieta_i2", v2, 512.0 * kEps * scale * scale);
      s.check("eig3.vieta_i3", v3, 1024.0 * kEps * scale * scale * scale);

      // Characteristic polynomial residual per eigenvalue.
      for (int k = 0; k < 3; ++k) {
        double x = l[static_cast<std::size_t>(k)];
        double res = std::abs(((x - inv.i1) * x + inv.i2) * x - inv.i3);
        s.check("eig3.charpoly_residual", res, 1e-12 * scale * scale * scale);
      }
    }

    // atan2 formulation equals the explicit sign-shifted arctan identity.
    double dq = rng.uniform(-5.0, 5.0);
    double delta = rng.uniform(0.0, 5.0);
    if (dq != 0.0) {
      double via_atan2 = std::atan2(3.0 * std::sqrt(3.0) * std::sqrt(delta), dq) / 3.0;
      double shift = (dq > 0.0) ? 0.0 : Constants<double>::pi();
      double piecewise =
          (std::atan(3.0 * std::sqrt(3.0) * std::sqrt(delta) / dq) + shift) / 3.0;
      s.check("eig3.atan2_vs_piecewise", std::abs(via_atan2 - piecewise), 4.0 * kEps);
    }
  }
}

void projector_properties(Suite& s) {
  Sampler rng(s.seed ^ 0x66);
  int fd_budget = std::max(1, s.trials / 10);
  int fd_done = 0;
  for (int t = 0; t < s.trials; ++t) {
    std::array<double, 3> lam;
    Mat3<double> a = rng.real_spectrum_matrix(1e-2, &lam, /*rational_u=*/true);
    double scale = max_abs(a);
    Result<Projectors> pr = projectors_dual(a);
    if (!pr.ok()) {
      s.check("projectors.decomposition_ok", 1.0, 0.0);
      continue;
    }
    const Projectors& p = *pr;

    double id_err = max_abs(p.sum() - Mat3<double>::identity());
    s.check("projectors.sum_identity", id_err, 1e-9);

    for (std::size_t i = 0; i < p.entries.size(); ++i) {
      for (std::size_t j = 0; j < p.entries.size(); ++j) {
        Mat3<double> prod = mat_mul(p.entries[i].projector, p.entries[j].projector);
        Mat3<double> expect = (i == j) ? p.entries[j].projector : Mat3<double>::zero();
        s.check("projectors.idempotent_orthogonal", max_abs(prod - expect), 1e-9);
      }
      double tr_err = std::abs(trace(p.entries[i].projector) -
                               static_cast<double>(p.entries[i].multiplicity));
      s.check("projectors.trace_multiplicity", tr_err, 1e-9);
      if (p.entries[i].multiplicity < 3) {
        s.check("projectors.rank_deficient", std::abs(det3(p.entries[i].projector)), 1e-9);
      }
      // Right eigenproblem residual A E = lambda E.
      Mat3<double> res = mat_mul(a, p.entries[i].projector) -
                         p.entries[i].lambda * p.entries[i].projector;
      s.check("projectors.eigen_residual", max_abs(res), 1e-9 * std::max(1.0, scale));
    }

    s.check("projectors.reconstruction", max_abs(p.reconstruct() - a),
            1e-9 * std::max(1.0, scale));

    // Cross-method agreement on comfortably separated spectra.
    Result<Projectors> fr = projectors_frobenius(a, {lam[0], lam[1], lam[2]});
    if (fr.ok() && p.entries.size() == 3) {
      for (int k = 0; k < 3; ++k) {
        s.check("projectors.dual_vs_frobenius",
                max_abs(p.entries[static_cast<std::size_t>(k)].projector -
                        fr->entries[static_cast<std::size_t>(k)].projector),
                1e-9 * std::max(1.0, scale));
      }
    }

    // Finite-difference derivative check (on a budgeted subset; it is 18
    // decompositions per matrix). Restricted to well-separated spectra:
    // near-degenerate ones the second derivative ~ 1/gap^2 dominates the
    // central-difference truncation error.
    double min_gap = std::min(lam[1] - lam[0], lam[2] - lam[1]);
    if (fd_done < fd_budget && p.entries.size() == 3 && min_gap >= 0.1) {
      ++fd_done;
      double h = 1e-6 * std::max(1.0, scale);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          Mat3<double> ap = a, am = a;
          ap(i, j) += h;
          am(i, j) -= h;
          Result<EigenTriple<double>> ep = eigenvalues(ap);
          Result<EigenTriple<double>> em = eigenvalues(am);
          if (!ep.ok() || !em.ok()) continue;
          for (int k = 0; k < 3; ++k) {
            double fd = (ep->lambda[static_cast<std::size_t>(k)] -
                         em->lambda[static_cast<std::size_t>(k)]) /
                        (2.0 * h);
            double an = p.entries[static_cast<std::size_t>(k)].projector(j, i);
            double denom = std::max(std::abs(fd), 1e-3);
            s.check("projectors.finite_difference", std::abs(fd - an) / denom, 1e-3);
          }
        }
      }
    }
  }
}

void oracle_properties(Suite& s) {
  Sampler rng(s.seed ^ 0x77);
  for (int t = 0; t < s.trials; ++t) {
    // Round-trip: a + b - b recovers a through the unevaluated sum.
    double a = rng.uniform(-1.0, 1.0) * std::pow(10.0, rng.uniform(-10.0, 10.0));
    double b = rng.uniform(-1.0, 1.0) * std::pow(10.0, rng.uniform(-10.0, 10.0));
    DDouble x = (DDouble(a) + DDouble(b)) - DDouble(b);
    double rel = std::abs(to_double(x - DDouble(a))) /
                 std::max(std::abs(a), std::abs(b) * 0x1p-104);
    s.check("oracle.dd_add_roundtrip", rel, 0x1p-104);

    DDouble sq = sqrt(DDouble(std::abs(a)));
    double sq_rel = std::abs(to_double(sq * sq - DDouble(std::abs(a)))) / std::abs(a);
    s.check("oracle.dd_sqrt", sq_rel, 0x1p-100);

    DDouble theta(rng.uniform(-3.0, 3.0));
    DDouble sn, cs;
    sin_cos(theta, sn, cs);
    s.check("oracle.dd_sin_cos_pythagoras",
            std::abs(to_double(sn * sn + cs * cs - DDouble(1.0))), 0x1p-100);
    s.check("oracle.dd_atan2_inverts_sincos",
            std::abs(to_double(atan2(sn, cs) - theta)), 0x1p-98);
  }

  // Ground-truth self-consistency over the benchmark grid: trace-based and
  // eigenvalue-based definitions agree relative to the natural scale power.
  for (CriticalCase cc : {CriticalCase::DeltaToZero, CriticalCase::DeltaPToZero,
                          CriticalCase::DeltaQToZero}) {
    for (double delta : log_grid(0x1p-52, 1.0, 1)) {
      auto made = make_test_matrix(cc, TransformCase::case_i(), delta);
      if (!made.ok()) continue;
      const GroundTruth& gt = made->second;
      double scale = max_abs(gt.matrix);
      DDouble prod(1.0), half_sum(0.0), q_prod(1.0);
      for (int i = 0; i < 3; ++i) {
        q_prod *= DDouble(3.0) * gt.lambda[static_cast<std::size_t>(i)] - gt.i1;
        for (int j = i + 1; j < 3; ++j) {
          DDouble d = gt.lambda[static_cast<std::size_t>(i)] -
                      gt.lambda[static_cast<std::size_t>(j)];
          prod *= d * d;
          half_sum += d * d;
        }
      }
      half_sum = half_sum / DDouble(2.0);
      double tol = 0x1p-80;
      s.check("oracle.selfconsistency_delta",
              std::abs(to_double(prod - gt.delta)) / std::pow(scale, 6), tol);
      s.check("oracle.selfconsistency_deltap",
              std::abs(to_double(half_sum - gt.delta_p)) / std::pow(scale, 2), tol);
      s.check("oracle.selfconsistency_deltaq",
              std::abs(to_double(q_prod - gt.delta_q)) / std::pow(scale, 3), tol);
    }
  }

  // Conditioning of the CaseII transform grows as gamma shrinks.
  double k_small = condition_number(transform_matrix(TransformCase::case_ii(1e-3)));
  double k_one = condition_number(transform_matrix(TransformCase::case_ii(1.0)));
  s.check("oracle.caseii_condition_monotone",
          k_small > 100.0 * k_one ? 0.0 : 1.0, 0.0);
}

}  // namespace

std::vector<PropertyResult> run_verification(std::uint64_t seed, int trials) {
  Suite s{seed, trials, {}};
  mat3_properties(s);
  invariant_route_agreement(s);
  subdiscriminant_identities(s);
  sop_structure(s);
  eig_properties(s);
  projector_properties(s);
  oracle_properties(s);
  return s.results;
}

bool report_verification(std::ostream& os, const std::vector<PropertyResult>& results) {
  bool all = true;
  for (const PropertyResult& r : results) {
    os << (r.passed ? "PASS" : "FAIL") << "  " << r.name
       << "  max_violation=" << r.max_violation << "  threshold=" << r.threshold
       << "\n";
    all = all && r.passed;
  }
  os << (all ? "verification passed" : "verification FAILED") << "\n";
  return all;
}

}  // namespace spectral3
