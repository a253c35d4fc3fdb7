#ifndef GYROSIM_RUN_CONFIG_HPP
#define GYROSIM_RUN_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "gyrosim/epsilon_model.hpp"
#include "gyrosim/initial_condition.hpp"
#include "gyrosim/limit_model.hpp"
#include "gyrosim/params.hpp"

namespace gyrosim {

// Complete description of one simulation run, read from a sectioned
// key = value file:
//
//   [physics]    omega_c (required), epsilon, delta
//   [initial]    kind (required: gaussian | cosine | two-stream),
//                center_x1/x2, center_v1/v2, radius_x, radius_v, total_mass
//   [sampling]   n_per_dim, seed, jitter
//   [integrator] scheme (rk4 | midpoint), dt, midpoint_tol, midpoint_max_iters
//   [split]      dt, substeps_per_cyclotron_period
//   [run]        t_end (required), snapshot_every (required), output_dir
//
// Keys not marked required fall back to the member defaults below.  '#' and
// ';' start comments.  Unknown sections or keys and every value violating an
// invariant are rejected with an error naming the key; nothing is silently
// misread.
struct RunConfig {
  PhysicalParams params{1.0, 1.0, 1e-3};
  InitialCondition ic;
  int n_per_dim = 8;
  std::uint64_t seed = 0;
  double jitter = 0.0;
  IntegratorConfig integrator;
  SplitStepConfig split;
  double t_end = 1.0;
  double snapshot_every = 0.1;
  std::string output_dir = "out";

  void validate() const;  // throws std::invalid_argument naming the field
};

RunConfig parse_run_config(std::istream& in);
RunConfig load_run_config(const std::string& path);  // invalid_argument if unreadable

}  // namespace gyrosim

#endif
