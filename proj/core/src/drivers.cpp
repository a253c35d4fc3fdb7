#include "gyrosim/drivers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

#include "gyrosim/csv_io.hpp"
#include "gyrosim/diagnostics.hpp"
#include "gyrosim/gyro_transform.hpp"
#include "gyrosim/kernel.hpp"
#include "gyrosim/sampling.hpp"

namespace gyrosim {

namespace {

namespace fs = std::filesystem;

std::string prepare_output_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create output directory '" + dir + "'");
  }
  return dir;
}

double uniform(std::mt19937_64& gen, double lo, double hi) {
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

}  // namespace

int run_limit(const RunConfig& cfg, std::ostream& log, bool quiet) {
  cfg.validate();
  const std::string dir = prepare_output_dir(cfg.output_dir);
  const SampledPair sampled =
      sample_initial(cfg.ic, cfg.params, cfg.n_per_dim, cfg.seed, cfg.jitter);

  std::vector<DiagRow> rows;
  std::size_t index = 0;
  auto observer = [&](const Ensemble& snap) {
    write_snapshot(dir + "/" + snapshot_filename(index++), snap);
    rows.push_back(diag_row(snap));
  };
  integrate(sampled.gyro, cfg.integrator, cfg.t_end, cfg.snapshot_every, observer);
  write_diag(dir + "/diag.csv", rows);
  if (!quiet) {
    log << "run-limit: " << sampled.gyro.size() << " markers, " << index
        << " snapshots -> " << dir << "\n";
  }
  return 0;
}

int run_full(const RunConfig& cfg, std::ostream& log, bool quiet) {
  cfg.validate();
  const std::string dir = prepare_output_dir(cfg.output_dir);
  const SampledPair sampled =
      sample_initial(cfg.ic, cfg.params, cfg.n_per_dim, cfg.seed, cfg.jitter);

  std::vector<DiagRow> rows;
  std::size_t index = 0;
  auto observer = [&](const Ensemble& snap) {
    write_snapshot(dir + "/" + snapshot_filename(index++), snap);
    rows.push_back(diag_row(to_gyro(snap)));
  };
  integrate_full(sampled.lab, cfg.split, cfg.t_end, cfg.snapshot_every, observer);
  write_diag(dir + "/diag.csv", rows);
  if (!quiet) {
    log << "run-full: " << sampled.lab.size() << " markers, " << index
        << " snapshots -> " << dir << "\n";
  }
  return 0;
}

int run_compare(const RunConfig& cfg, const std::vector<double>& eps_list,
                std::ostream& log, bool quiet, bool disable_field) {
  cfg.validate();
  if (eps_list.empty()) {
    throw std::invalid_argument("compare: epsilon list must not be empty");
  }
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (!std::isfinite(eps_list[i]) || eps_list[i] <= 0.0) {
      throw std::invalid_argument("compare: epsilon values must be positive");
    }
    if (i > 0 && !(eps_list[i] < eps_list[i - 1])) {
      throw std::invalid_argument("compare: epsilon list must decrease strictly");
    }
  }
  const std::string dir = prepare_output_dir(cfg.output_dir);

  const SampledPair sampled =
      sample_initial(cfg.ic, cfg.params, cfg.n_per_dim, cfg.seed, cfg.jitter);

  IntegratorConfig icfg = cfg.integrator;
  icfg.disable_field = disable_field;
  const TrajectoryRecord limit_rec =
      integrate(sampled.gyro, icfg, cfg.t_end, cfg.snapshot_every);

  SplitStepConfig scfg = cfg.split;
  scfg.disable_field = disable_field;

  std::vector<double> errors;
  for (const double eps : eps_list) {
    Ensemble lab = sampled.lab;
    lab.params.epsilon = eps;
    const TrajectoryRecord rec = integrate_full(lab, scfg, cfg.t_end, cfg.snapshot_every);
    errors.push_back(trajectory_error(filtered_trajectory(rec), limit_rec));
  }

  std::ofstream out(dir + "/compare.csv");
  if (!out) {
    throw std::runtime_error("cannot write '" + dir + "/compare.csv'");
  }
  out << "epsilon,trajectory_error\n";
  char buf[80];
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", eps_list[i], errors[i]);
    out << buf;
  }

  bool decreasing = true;
  for (std::size_t i = 1; i < errors.size(); ++i) {
    if (!(errors[i] < errors[i - 1])) decreasing = false;
  }
  if (!quiet) {
    log << "epsilon        trajectory_error\n";
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%-14.6g %.12e\n", eps_list[i], errors[i]);
      log << buf;
    }
    log << (decreasing ? "error decreases strictly with epsilon\n"
                       : "error is NOT strictly decreasing\n");
  }
  return decreasing ? 0 : 1;
}

int verify_kernel(int n_samples, int n_nodes, double tol, std::uint64_t seed,
                  std::ostream& log, bool quiet) {
  if (n_samples < 0) {
    throw std::invalid_argument("verify-kernel: n_samples must be nonnegative");
  }
  if (n_samples == 0) {
    log << "warning: verify-kernel ran with zero samples; nothing was checked\n";
    return 0;
  }
  if (n_nodes < 8) {
    throw std::invalid_argument("verify-kernel: n_nodes must be >= 8");
  }
  if (!std::isfinite(tol) || tol < 0.0) {
    throw std::invalid_argument("verify-kernel: tolerance must be nonnegative");
  }

  // Sample radii with the ratio |xi| : |eta|/|omega_c| bounded away from 1;
  // the periodic trapezoid rule converges like ratio^n_nodes, so points near
  // the branch circle would need impractically many nodes.
  std::mt19937_64 gen(seed);
  const double omegas[] = {1.0, -1.0, 1.7, -1.7, 3.0, -3.0};
  double worst = 0.0;
  for (int s = 0; s < n_samples; ++s) {
    PhysicalParams p;
    p.omega_c = omegas[gen() % 6];
    p.delta = 0.0;
    const double r_xi = uniform(gen, 0.2, 2.0);
    const bool near_branch = (gen() & 1u) != 0;
    const double gate_over_xi =
        near_branch ? uniform(gen, 1.2, 8.0) : uniform(gen, 0.1, 0.8);
    const double r_eta = r_xi * gate_over_xi * std::abs(p.omega_c);
    const double a_xi = uniform(gen, 0.0, 2.0 * std::numbers::pi);
    const double a_eta = uniform(gen, 0.0, 2.0 * std::numbers::pi);
    const Vec2 xi = r_xi * Vec2{std::cos(a_xi), std::sin(a_xi)};
    const Vec2 eta = r_eta * Vec2{std::cos(a_eta), std::sin(a_eta)};
    const double closed = gyro_kernel(xi, eta, p);
    const double averaged = gyro_average_oracle(xi, eta, p, n_nodes);
    worst = std::max(worst, std::abs(closed - averaged));
  }
  if (!quiet) {
    log << "verify-kernel: " << n_samples << " samples, " << n_nodes
        << " nodes, worst deviation " << worst << " (tolerance " << tol << ")\n";
  }
  return worst <= tol ? 0 : 1;
}

int diagnose(const RunConfig& cfg, std::ostream& log, bool quiet) {
  cfg.validate();
  const std::string dir = cfg.output_dir;
  std::vector<DiagRow> rows;
  for (std::size_t index = 0;; ++index) {
    const std::string path = dir + "/" + snapshot_filename(index);
    if (!fs::exists(path)) break;
    Ensemble ens;
    ens.particles = read_snapshot(path);
    ens.params = cfg.params;
    ens.time = static_cast<double>(index) * cfg.snapshot_every;
    ens.frame = Frame::GyroFrame;
    rows.push_back(diag_row(ens));
  }
  if (rows.empty()) {
    throw std::runtime_error("diagnose: no snapshots found in '" + dir + "'");
  }
  write_diag(dir + "/diag.csv", rows);
  if (!quiet) {
    log << "diagnose: rebuilt diag.csv from " << rows.size() << " snapshots in "
        << dir << "\n";
  }
  return 0;
}

}  // namespace gyrosim
