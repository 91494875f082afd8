// wboost: Wigner-rotation toolkit front end.
//
//   wboost angle  --eta <r> --xi <r>
//   wboost sweep  --scenario <file> [--out <file>]
//   wboost verify --spin-max <two_s> --trials <n> --seed <n>
//   wboost basis  --spin <two_s> --out <file> [--axis x,y,z]
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wboost/cli/reports.hpp"
#include "wboost/cli/scenario.hpp"
#include "wboost/cli/sweep.hpp"
#include "wboost/cli/verify.hpp"
#include "wboost/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw wboost::InputError("cannot open output file '" + path + "'");
  return out;
}

int run_angle(double eta, double xi) {
  const wboost::cli::AngleReport report = wboost::cli::angle_report(eta, xi);
  wboost::cli::print_angle_report(report, std::cout);
  if (!report.agrees()) {
    std::cerr << "wboost: closed form and composition disagree by more than "
              << wboost::cli::format_real(wboost::cli::kAngleAgreementTolerance) << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int run_sweep(const std::string& scenario_path, const std::string& out_override) {
  const wboost::cli::Scenario scenario = wboost::cli::load_scenario(scenario_path, std::cerr);
  const std::string path = out_override.empty() ? scenario.output : out_override;
  if (path.empty()) throw wboost::InputError("no output path: pass --out or set 'output'");
  const wboost::SweepResult result = wboost::cli::run_sweep(scenario);
  std::ofstream out = open_output(path);
  wboost::cli::write_sweep(result, scenario.format, out);
  if (!out) throw wboost::InputError("failed writing '" + path + "'");
  std::cout << "wrote " << result.grid_size() << " grid points to " << path << "\n";
  return kExitOk;
}

int run_verify(const wboost::cli::VerifyOptions& options) {
  const wboost::cli::VerifyReport report = wboost::cli::run_verification(options);
  wboost::cli::print_report(report, std::cout);
  if (!report.passed()) {
    for (const auto& c : report.checks) {
      if (!c.passed()) std::cerr << "wboost: check failed: " << c.name << "\n";
    }
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int run_basis(int two_s, const std::vector<double>& axis, const std::string& path) {
  const wboost::Vec3 n(axis.at(0), axis.at(1), axis.at(2));
  const wboost::InvariantBasis basis = wboost::build_invariant_basis(wboost::Spin(two_s), n);
  std::ofstream out = open_output(path);
  out << wboost::cli::basis_to_json(basis).dump(2) << "\n";
  if (!out) throw wboost::InputError("failed writing '" + path + "'");
  std::cout << "wrote " << basis.as_matrix().cols() << " basis vectors to " << path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lorentz-boost spin transformations, invariant bases and spin-momentum entanglement"};
  app.require_subcommand(1);

  double eta = 0.0;
  double xi = 0.0;
  auto* angle = app.add_subcommand("angle", "Wigner angle: closed form vs 4x4 composition");
  angle->add_option("--eta", eta, "momentum rapidity magnitude")->required()->check(CLI::NonNegativeNumber);
  angle->add_option("--xi", xi, "boost rapidity magnitude")->required()->check(CLI::NonNegativeNumber);

  std::string scenario_path;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a scenario grid to CSV/JSON");
  sweep->add_option("--scenario", scenario_path, "scenario file")->required();
  sweep->add_option("--out", sweep_out, "output file (overrides the scenario's 'output')");

  wboost::cli::VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Run the randomized consistency checks");
  verify->add_option("--spin-max", verify_opts.two_s_max, "largest two_s to test")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--trials", verify_opts.trials, "trials per check")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", verify_opts.seed, "random seed");
  verify->add_flag("--debug-corrupt-basis", verify_opts.corrupt_basis)->group("");

  int basis_two_s = 1;
  std::vector<double> basis_axis{0.0, 1.0, 0.0};
  std::string basis_out;
  auto* basis = app.add_subcommand("basis", "Dump the invariant basis as JSON");
  basis->add_option("--spin", basis_two_s, "two_s")->required()->check(CLI::NonNegativeNumber);
  basis->add_option("--out", basis_out, "output JSON file")->required();
  basis->add_option("--axis", basis_axis, "Wigner rotation axis")->expected(3)->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*angle) return run_angle(eta, xi);
    if (*sweep) return run_sweep(scenario_path, sweep_out);
    if (*verify) return run_verify(verify_opts);
    if (*basis) return run_basis(basis_two_s, basis_axis, basis_out);
  } catch (const wboost::InputError& e) {
    std::cerr << "wboost: " << e.what() << "\n";
    return kExitInputError;
  } catch (const wboost::ToleranceError& e) {
    std::cerr << "wboost: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitInputError;
}
