#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "spectral3/oracle.hpp"

namespace spectral3 {

/// One row of the benchmark CSV: the error of one computed quantity at one
/// grid point, against the double-double reference.
struct BenchRecord {
  std::string case_name;
  std::string transform;
  std::optional<double> gamma;
  std::string method;
  double delta = 0.0;
  std::string quantity;
  double computed = 0.0;
  double reference = 0.0;
  double abs_error = 0.0;
};

struct BenchConfig {
  CriticalCase critical_case = CriticalCase::DeltaToZero;
  TransformCase transform = TransformCase::case_i();
  double delta_start = 1e-15;
  double delta_stop = 1.0;
  int points_per_decade = 4;
  std::vector<InvariantRoute> methods = {InvariantRoute::Sop, InvariantRoute::Naive};
};

/// Logarithmic grid with floor(ppd*log10(stop/start)) + 1 points, endpoints
/// included.
std::vector<double> log_grid(double start, double stop, int points_per_decade);

/// Shortest round-trip decimal form of a double.
std::string format_shortest(double x);

/// Decomposition settings implied by a benchmark method name: the
/// sum-of-products route pairs with the arctan angle, the naive route with
/// the classical arccos inversion.
DecompOptions method_options(InvariantRoute route);

/// Runs the sweep; rows come out sorted by (case, transform, method, delta,
/// quantity).
std::vector<BenchRecord> run_bench(const BenchConfig& config);

/// UTF-8, LF line endings, mandatory header row.
void write_csv(std::ostream& os, const std::vector<BenchRecord>& records);

}  // namespace spectral3
