#ifndef GYROSIM_DRIVERS_HPP
#define GYROSIM_DRIVERS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gyrosim/run_config.hpp"

namespace gyrosim {

// Library-level implementations of the CLI subcommands.  Exit-code
// convention: 0 success, 1 verification or runtime failure.  Configuration
// problems are reported by throwing std::invalid_argument, which the binary
// turns into exit code 2.

// Effective-model run: samples markers, integrates in the gyro frame,
// writes snapshot_<i>.csv and diag.csv into cfg.output_dir.
int run_limit(const RunConfig& cfg, std::ostream& log, bool quiet = false);

// Scaled-model run: lab-frame snapshots; the diagnostics table is computed
// on the gyro-filtered view of each snapshot so both runs are comparable.
int run_full(const RunConfig& cfg, std::ostream& log, bool quiet = false);

// One effective run against one scaled run per epsilon (strictly decreasing
// list), sharing markers and snapshot cadence.  Prints and writes
// compare.csv (epsilon, trajectory error); exit 0 iff the error decreases
// strictly along the list.  disable_field switches the interaction off in
// both models (the filter then inverts the gyration exactly).
int run_compare(const RunConfig& cfg, const std::vector<double>& eps_list,
                std::ostream& log, bool quiet = false, bool disable_field = false);

// Spot-checks the closed-form gyro average against the quadrature oracle at
// random off-boundary samples; exit 0 iff the worst deviation is within tol.
// n_samples = 0 succeeds vacuously with a warning.
int verify_kernel(int n_samples, int n_nodes, double tol, std::uint64_t seed,
                  std::ostream& log, bool quiet = false);

// Recomputes diag.csv from the snapshots found in cfg.output_dir (gyro-frame
// interpretation, times from the snapshot cadence).
int diagnose(const RunConfig& cfg, std::ostream& log, bool quiet = false);

}  // namespace gyrosim

#endif
