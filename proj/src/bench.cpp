#include "spectral3/bench.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <tuple>

namespace spectral3 {

std::vector<double> log_grid(double start, double stop, int points_per_decade) {
  int n = static_cast<int>(std::floor(points_per_decade * std::log10(stop / start))) + 1;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n));
  double lg = std::log10(start);
  for (int i = 0; i < n; ++i) {
    double v = std::pow(10.0, lg + static_cast<double>(i) / points_per_decade);
    if (i == n - 1 && std::abs(v - stop) < 1e-9 * stop) v = stop;
    grid.push_back(v);
  }
  return grid;
}

std::string format_shortest(double x) {
  std::array<char, 32> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  (void)ec;
  return std::string(buf.data(), ptr);
}

DecompOptions method_options(InvariantRoute route) {
  DecompOptions opt;
  opt.route = route;
  opt.angle_method =
      route == InvariantRoute::Sop ? AngleMethod::Arctan : AngleMethod::Arccos;
  return opt;
}

namespace {

double dd_abs_error(double computed, const DDouble& reference) {
  return std::abs(to_double(abs(DDouble(computed) - reference)));
}

// Single Frobenius covariant in extended precision; only touches the two
// gaps adjacent to index k, so it stays well conditioned when the other two
// eigenvalues nearly coincide.
Mat3<DDouble> reference_covariant(const GroundTruth& gt, int k) {
  Mat3<DDouble> bd =
      Mat3<DDouble>::from(gt.matrix, [](double x) { return DDouble(x); });
  Mat3<DDouble> p = Mat3<DDouble>::identity();
  for (int i = 0; i < 3; ++i) {
    if (i == k) continue;
    DDouble scale = DDouble(1.0) / (gt.lambda[static_cast<std::size_t>(k)] -
                                    gt.lambda[static_cast<std::size_t>(i)]);
    Mat3<DDouble> factor = bd;
    for (int m = 0; m < 3; ++m) {
      factor(m, m) = factor(m, m) - gt.lambda[static_cast<std::size_t>(i)];
    }
    p = mat_mul(p, scale * factor);
  }
  return p;
}

// Summed entrywise absolute projector error. Merged reference projectors
// mirror the computed merge policy; each merged pair is taken as the
// complement of the simple covariant, which avoids the cancellation of
// summing two near-singular covariants.
double projector_l1_error(const Projectors& computed, const GroundTruth& gt) {
  std::vector<Mat3<DDouble>> matched;
  switch (computed.multiplicity) {
    case Multiplicity::Distinct:
      matched = {reference_covariant(gt, 0), reference_covariant(gt, 1),
                 reference_covariant(gt, 2)};
      break;
    case Multiplicity::DoubleLow: {
      Mat3<DDouble> simple = reference_covariant(gt, 2);
      matched = {Mat3<DDouble>::identity() - simple, simple};
      break;
    }
    case Multiplicity::DoubleHigh: {
      Mat3<DDouble> simple = reference_covariant(gt, 0);
      matched = {simple, Mat3<DDouble>::identity() - simple};
      break;
    }
    case Multiplicity::Triple:
      matched = {Mat3<DDouble>::identity()};
      break;
  }
  double err = 0.0;
  for (std::size_t k = 0; k < matched.size(); ++k) {
    const Mat3<double>& e = computed.entries[k].projector;
    for (int m = 0; m < 9; ++m) {
      err += std::abs(to_double(DDouble(e.e[m]) - matched[k].e[m]));
    }
  }
  return err;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  std::vector<BenchRecord> records;
  std::vector<double> grid =
      log_grid(config.delta_start, config.delta_stop, config.points_per_decade);

  std::string case_name = to_string(config.critical_case);
  std::string transform_name = to_string(config.transform.kind);
  std::optional<double> gamma;
  if (config.transform.kind == TransformCase::Kind::CaseII) {
    gamma = config.transform.gamma;
  }

  for (InvariantRoute route : config.methods) {
    DecompOptions opt = method_options(route);
    std::string method = to_string(route);
    for (double delta : grid) {
      auto made = make_test_matrix(config.critical_case, config.transform, delta);
      if (!made.ok()) continue;
      const Mat3<double>& b = made->first;
      const GroundTruth& gt = made->second;

      auto emit = [&](const std::string& quantity, double computed,
                      const DDouble& reference) {
        records.push_back({case_name, transform_name, gamma, method, delta,
                           quantity, computed, to_double(reference),
                           dd_abs_error(computed, reference)});
      };

      DerivedInvariants<double> der = derived_invariants(b, route);
      PrincipalInvariants<double> inv = principal_invariants(b);
      emit("Delta", der.delta, gt.delta);
      emit("Delta_p", der.delta_p, gt.delta_p);
      emit("Delta_q", der.delta_q, gt.delta_q);
      emit("I1", inv.i1, gt.i1);

      Result<EigenTriple<double>> eig = eigenvalues(b, opt);
      if (eig.ok()) {
        for (int k = 0; k < 3; ++k) {
          emit("lambda_" + std::to_string(k + 1), eig->lambda[static_cast<std::size_t>(k)],
               gt.lambda[static_cast<std::size_t>(k)]);
        }
      }

      Result<Projectors> proj = projectors_dual(b, opt);
      if (proj.ok()) {
        double el1 = projector_l1_error(*proj, gt);
        records.push_back({case_name, transform_name, gamma, method, delta,
                           "E_l1", el1, 0.0, el1});
      }
    }
  }

  std::sort(records.begin(), records.end(),
            [](const BenchRecord& a, const BenchRecord& b) {
              return std::tie(a.case_name, a.transform, a.method, a.delta, a.quantity) <
                     std::tie(b.case_name, b.transform, b.method, b.delta, b.quantity);
            });
  return records;
}

void write_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << "case,transform,gamma,method,delta,quantity,computed,reference,abs_error\n";
  for (const BenchRecord& r : records) {
    os << r.case_name << ',' << r.transform << ',';
    if (r.gamma) os << format_shortest(*r.gamma);
    os << ',' << r.method << ',' << format_shortest(r.delta) << ',' << r.quantity
       << ',' << format_shortest(r.computed) << ',' << format_shortest(r.reference)
       << ',' << format_shortest(r.abs_error) << '\n';
  }
}

}  // namespace spectral3
