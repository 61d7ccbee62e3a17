// Command-line front end: decompose a matrix, run benchmark sweeps to CSV,
// or run the verification suite.
//
// Exit statuses: 0 success, 1 usage error, 2 non-real spectrum or
// verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spectral3/bench.hpp"
#include "spectral3/eig3.hpp"
#include "spectral3/invariants.hpp"
#include "spectral3/projectors.hpp"
#include "spectral3/verify.hpp"

namespace {

using namespace spectral3;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

bool parse_route(const std::string& s, InvariantRoute& out) {
  if (s == "naive") { out = InvariantRoute::Naive; return true; }
  if (s == "sop") { out = InvariantRoute::Sop; return true; }
  return false;
}

bool parse_angle(const std::string& s, AngleMethod& out) {
  if (s == "arccos") { out = AngleMethod::Arccos; return true; }
  if (s == "arctan") { out = AngleMethod::Arctan; return true; }
  if (s == "series") { out = AngleMethod::Series; return true; }
  return false;
}

// 15 significant digits for the human-readable report: one ulp of closing
// error in the closed-form roots would otherwise print as 0.999999999999999x.
std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

nlohmann::json mat_json(const Mat3<double>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 3; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 3; ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

// Accepts the matrix as nine arguments or as comma-separated groups
// ("1,0,0,0,2,0,0,0,3").
bool parse_entries(const std::vector<std::string>& args, std::vector<double>& out) {
  for (const std::string& arg : args) {
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t pos = 0;
        double v = std::stod(tok, &pos);
        if (pos != tok.size() || !std::isfinite(v)) return false;
        out.push_back(v);
      } catch (const std::exception&) {
        return false;
      }
    }
  }
  return out.size() == 9;
}

int cmd_decompose(const std::vector<std::string>& args, const std::string& route_name,
                  const std::string& angle_name, const std::string& format) {
  InvariantRoute route;
  AngleMethod angle_method;
  if (!parse_route(route_name, route)) {
    std::cerr << "unknown route: " << route_name << "\n";
    return kExitUsage;
  }
  if (!parse_angle(angle_name, angle_method)) {
    std::cerr << "unknown angle method: " << angle_name << "\n";
    return kExitUsage;
  }
  std::vector<double> entries;
  if (!parse_entries(args, entries)) {
    std::cerr << "expected 9 finite matrix entries, row-major\n";
    return kExitUsage;
  }

  Mat3<double> a(entries[0], entries[1], entries[2],
                 entries[3], entries[4], entries[5],
                 entries[6], entries[7], entries[8]);

  DecompOptions opt;
  opt.route = route;
  opt.angle_method = angle_method;

  Result<EigenTriple<double>> eig = eigenvalues(a, opt);
  if (!eig.ok()) {
    std::cerr << "decomposition failed: " << to_string(eig.error()) << "\n";
    return kExitFailure;
  }
  Result<Projectors> proj = projectors_dual(a, opt);
  if (!proj.ok()) {
    std::cerr << "projector computation failed: " << to_string(proj.error()) << "\n";
    return kExitFailure;
  }

  DerivedInvariants<double> sop = derived_invariants(a, InvariantRoute::Sop);
  DerivedInvariants<double> naive = derived_invariants(a, InvariantRoute::Naive);
  PrincipalInvariants<double> inv = principal_invariants(a);

  if (format == "json") {
    nlohmann::json doc;
    doc["eigenvalues"] = {eig->lambda[0], eig->lambda[1], eig->lambda[2]};
    doc["multiplicity"] = to_string(eig->multiplicity);
    doc["phi"] = eig->phi;
    doc["invariants"] = {
        {"i1", inv.i1}, {"i2", inv.i2}, {"i3", inv.i3},
        {"sop", {{"delta_p", sop.delta_p}, {"delta_q", sop.delta_q}, {"delta", sop.delta}}},
        {"naive", {{"delta_p", naive.delta_p}, {"delta_q", naive.delta_q}, {"delta", naive.delta}}},
    };
    nlohmann::json projs = nlohmann::json::array();
    for (const auto& e : proj->entries) {
      projs.push_back({{"lambda", e.lambda},
                       {"multiplicity", e.multiplicity},
                       {"matrix", mat_json(e.projector)}});
    }
    doc["projectors"] = projs;
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "eigenvalues (ascending): " << fmt(eig->lambda[0]) << " "
            << fmt(eig->lambda[1]) << " "
            << fmt(eig->lambda[2]) << "\n";
  std::cout << "multiplicity: " << to_string(eig->multiplicity) << "\n";
  std::cout << "phi: " << fmt(eig->phi) << "\n";
  std::cout << "invariants: I1=" << fmt(inv.i1)
            << " I2=" << fmt(inv.i2)
            << " I3=" << fmt(inv.i3) << "\n";
  std::cout << "sop:   Delta_p=" << fmt(sop.delta_p)
            << " Delta_q=" << fmt(sop.delta_q)
            << " Delta=" << fmt(sop.delta) << "\n";
  std::cout << "naive: Delta_p=" << fmt(naive.delta_p)
            << " Delta_q=" << fmt(naive.delta_q)
            << " Delta=" << fmt(naive.delta) << "\n";
  for (const auto& e : proj->entries) {
    std::cout << "projector (lambda=" << fmt(e.lambda)
              << ", multiplicity=" << e.multiplicity << "):\n";
    for (int i = 0; i < 3; ++i) {
      std::cout << " ";
      for (int j = 0; j < 3; ++j) std::cout << " " << fmt(e.projector(i, j));
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_bench(const std::string& case_name, const std::string& transform_name,
              double gamma, double delta_start, double delta_stop,
              int points_per_decade, const std::string& methods_csv,
              const std::string& out_path) {
  BenchConfig config;
  if (case_name == "delta") config.critical_case = CriticalCase::DeltaToZero;
  else if (case_name == "deltap") config.critical_case = CriticalCase::DeltaPToZero;
  else if (case_name == "deltaq") config.critical_case = CriticalCase::DeltaQToZero;
  else {
    std::cerr << "unknown case: " << case_name << "\n";
    return kExitUsage;
  }

  if (transform_name == "case1") {
    config.transform = TransformCase::case_i();
  } else if (transform_name == "case2") {
    if (!(gamma > 0.0)) {
      std::cerr << "case2 requires --gamma > 0\n";
      return kExitUsage;
    }
    config.transform = TransformCase::case_ii(gamma);
  } else {
    std::cerr << "unknown transform: " << transform_name << "\n";
    return kExitUsage;
  }

  if (!(delta_start > 0.0) || !(delta_stop >= delta_start) || points_per_decade < 1) {
    std::cerr << "invalid sweep grid\n";
    return kExitUsage;
  }
  config.delta_start = delta_start;
  config.delta_stop = delta_stop;
  config.points_per_decade = points_per_decade;

  config.methods.clear();
  std::stringstream ss(methods_csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    InvariantRoute r;
    if (!parse_route(tok, r)) {
      std::cerr << "unknown method: " << tok << "\n";
      return kExitUsage;
    }
    config.methods.push_back(r);
  }
  if (config.methods.empty()) {
    std::cerr << "no methods selected\n";
    return kExitUsage;
  }

  std::vector<BenchRecord> records = run_bench(config);
  if (out_path.empty() || out_path == "-") {
    write_csv(std::cout, records);
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output path: " << out_path << "\n";
    return kExitUsage;
  }
  write_csv(out, records);
  if (!out.good()) {
    std::cerr << "write failed: " << out_path << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_verify(std::uint64_t seed, int trials) {
  std::vector<PropertyResult> results = run_verification(seed, trials);
  bool ok = report_verification(std::cout, results);
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form spectral decomposition of real 3x3 matrices"};
  app.require_subcommand(1);

  // decompose
  std::vector<std::string> entries;
  std::string route_name = "sop";
  std::string angle_name = "arctan";
  std::string format = "text";
  CLI::App* dec = app.add_subcommand("decompose", "Decompose one matrix");
  dec->add_option("matrix", entries, "9 entries row-major, comma or space separated")
      ->expected(-1)
      ->required();
  dec->add_option("--route", route_name, "Invariant route: sop|naive");
  dec->add_option("--angle", angle_name, "Angle method: arctan|arccos|series");
  dec->add_option("--format", format, "Output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));

  // bench
  std::string case_name = "delta";
  std::string transform_name = "case1";
  double gamma = 1e-3;
  double delta_start = 1e-15;
  double delta_stop = 1.0;
  int ppd = 4;
  std::string methods_csv = "sop,naive";
  std::string out_path;
  CLI::App* bench = app.add_subcommand("bench", "Run an error sweep to CSV");
  bench->add_option("--case", case_name, "Critical case: delta|deltap|deltaq");
  bench->add_option("--transform", transform_name, "Similarity transform: case1|case2");
  bench->add_option("--gamma", gamma, "case2 conditioning parameter (> 0)");
  bench->add_option("--delta-start", delta_start, "Smallest delta");
  bench->add_option("--delta-stop", delta_stop, "Largest delta");
  bench->add_option("--points-per-decade", ppd, "Grid density");
  bench->add_option("--methods", methods_csv, "Comma list of sop,naive");
  bench->add_option("--out", out_path, "Output CSV path (default stdout)");

  // verify
  std::uint64_t seed = 20240915;
  int trials = 1000;
  CLI::App* ver = app.add_subcommand("verify", "Run the property suites");
  ver->add_option("--seed", seed, "RNG seed");
  ver->add_option("--trials", trials, "Trials per property family")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (dec->parsed()) return cmd_decompose(entries, route_name, angle_name, format);
  if (bench->parsed()) {
    return cmd_bench(case_name, transform_name, gamma, delta_start, delta_stop,
                     ppd, methods_csv, out_path);
  }
  return cmd_verify(seed, trials);
}
