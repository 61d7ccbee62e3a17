#include "doctest.h"

#include <cmath>
#include <set>
#include <sstream>
#include <tuple>

#include "spectral3/bench.hpp"

using namespace spectral3;

TEST_CASE("log grid: count, endpoints, monotonicity") {
  // floor(4 * log10(1 / 1e-15)) + 1 = 61.
  std::vector<double> g = log_grid(1e-15, 1.0, 4);
  CHECK(g.size() == 61);
  CHECK(g.front() == 1e-15);
  CHECK(g.back() == 1.0);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);

  CHECK(log_grid(1e-2, 1.0, 1).size() == 3);
  CHECK(log_grid(1.0, 1.0, 4).size() == 1);
  // One point per decade across two decades.
  std::vector<double> g2 = log_grid(0.01, 1.0, 1);
  CHECK(g2[1] == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("shortest round-trip formatting") {
  CHECK(format_shortest(0.1) == "0.1");
  CHECK(format_shortest(1e-15) == "1e-15");
  CHECK(format_shortest(0.0) == "0");
  CHECK(format_shortest(-2.5) == "-2.5");
  double v = 1.0 / 3.0;
  CHECK(std::stod(format_shortest(v)) == v);
}

TEST_CASE("method to decomposition-option pairing") {
  DecompOptions s = method_options(InvariantRoute::Sop);
  CHECK(s.route == InvariantRoute::Sop);
  CHECK(s.angle_method == AngleMethod::Arctan);
  DecompOptions n = method_options(InvariantRoute::Naive);
  CHECK(n.route == InvariantRoute::Naive);
  CHECK(n.angle_method == AngleMethod::Arccos);
}

TEST_CASE("bench sweep: row inventory and ordering") {
  BenchConfig config;
  config.delta_start = 1e-6;
  config.delta_stop = 1e-2;
  config.points_per_decade = 1;
  std::vector<BenchRecord> rows = run_bench(config);

  // 5 grid points x 2 methods x 8 quantities.
  CHECK(rows.size() == 80);

  std::set<std::string> quantities;
  for (const BenchRecord& r : rows) {
    quantities.insert(r.quantity);
    CHECK(r.case_name == "delta");
    CHECK(r.transform == "case1");
    CHECK(!r.gamma.has_value());
    CHECK(std::isfinite(r.abs_error));
    CHECK(r.abs_error >= 0.0);
  }
  CHECK(quantities == std::set<std::string>{"Delta", "Delta_p", "Delta_q", "I1",
                                            "lambda_1", "lambda_2", "lambda_3",
                                            "E_l1"});

  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto key = [](const BenchRecord& r) {
      return std::tie(r.case_name, r.transform, r.method, r.delta, r.quantity);
    };
    CHECK(key(rows[i - 1]) < key(rows[i]));
  }
}

TEST_CASE("csv output: header, determinism, gamma column") {
  BenchConfig config;
  config.delta_start = 1e-4;
  config.delta_stop = 1e-2;
  config.points_per_decade = 1;
  config.transform = TransformCase::case_ii(1e-3);
  config.methods = {InvariantRoute::Sop};

  std::ostringstream a, b;
  write_csv(a, run_bench(config));
  write_csv(b, run_bench(config));
  CHECK(a.str() == b.str());

  std::istringstream in(a.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "case,transform,gamma,method,delta,quantity,computed,reference,abs_error");
  std::string row;
  std::getline(in, row);
  CHECK(row.find("case2,0.001,sop,") != std::string::npos);
  CHECK(a.str().find("\r\n") == std::string::npos);  // LF line endings only
}

TEST_CASE("error rows reflect the known accuracy split") {
  BenchConfig config;
  config.delta_start = 1e-10;
  config.delta_stop = 1e-10;
  config.points_per_decade = 4;
  std::vector<BenchRecord> rows = run_bench(config);

  double true_delta = 0.0, sop_err = -1.0, naive_err = -1.0;
  for (const BenchRecord& r : rows) {
    if (r.quantity != "Delta") continue;
    true_delta = r.reference;
    if (r.method == "sop") sop_err = r.abs_error;
    if (r.method == "naive") naive_err = r.abs_error;
  }
  REQUIRE(true_delta > 0.0);
  REQUIRE(sop_err >= 0.0);
  REQUIRE(naive_err >= 0.0);
  CHECK(sop_err < 1e-3 * true_delta);       // sop tracks the tiny true value
  CHECK(naive_err >= 0.9 * true_delta);     // naive is noise or exactly zero
}
