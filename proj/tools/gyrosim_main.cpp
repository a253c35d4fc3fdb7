// Command line front end for the gyro-averaged particle simulator.
//
// Exit codes: 0 success, 1 verification or runtime failure, 2 bad usage
// or bad configuration.

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gyrosim/drivers.hpp"
#include "gyrosim/run_config.hpp"

namespace {

gyrosim::RunConfig load_config(const std::string& path, const std::string& out_override) {
  gyrosim::RunConfig cfg = gyrosim::load_run_config(path);
  if (!out_override.empty()) cfg.output_dir = out_override;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted-particle simulator for the gyro-averaged limit model"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_override;
  bool quiet = false;

  auto add_common = [&](CLI::App* sub, bool needs_config) {
    if (needs_config) {
      sub->add_option("--config", config_path, "run configuration (INI)")->required();
      sub->add_option("--out", out_override, "override [run] output_dir");
    }
    sub->add_flag("--quiet", quiet, "suppress progress output");
  };

  CLI::App* limit = app.add_subcommand("run-limit", "integrate the effective model in gyro coordinates");
  add_common(limit, true);

  CLI::App* full = app.add_subcommand("run-full", "integrate the scaled system in the lab frame");
  add_common(full, true);

  CLI::App* cmp = app.add_subcommand("compare", "measure the gap between scaled runs and the limit run");
  add_common(cmp, true);
  std::vector<double> eps_list{0.1, 0.05, 0.025};
  bool disable_field = false;
  cmp->add_option("--eps", eps_list, "strictly decreasing epsilon values");
  cmp->add_flag("--disable-field", disable_field, "debug: drop the self-consistent field");

  CLI::App* verify = app.add_subcommand("verify-kernel", "check the closed-form kernel against quadrature");
  add_common(verify, false);
  int n_samples = 1000;
  int n_nodes = 512;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  verify->add_option("--samples", n_samples, "number of random evaluation points");
  verify->add_option("--nodes", n_nodes, "quadrature nodes per gyro circle");
  verify->add_option("--tol", tol, "largest allowed deviation");
  verify->add_option("--seed", seed, "sampler seed");

  CLI::App* diag = app.add_subcommand("diagnose", "rebuild diag.csv from snapshots on disk");
  add_common(diag, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // --help is 0, every usage mistake is 2
  }

  try {
    if (limit->parsed()) {
      return gyrosim::run_limit(load_config(config_path, out_override), std::cout, quiet);
    }
    if (full->parsed()) {
      return gyrosim::run_full(load_config(config_path, out_override), std::cout, quiet);
    }
    if (cmp->parsed()) {
      return gyrosim::run_compare(load_config(config_path, out_override), eps_list,
                                  std::cout, quiet, disable_field);
    }
    if (verify->parsed()) {
      return gyrosim::verify_kernel(n_samples, n_nodes, tol, seed, std::cout, quiet);
    }
    if (diag->parsed()) {
      return gyrosim::diagnose(load_config(config_path, out_override), std::cout, quiet);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
