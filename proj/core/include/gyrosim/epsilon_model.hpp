#ifndef GYROSIM_EPSILON_MODEL_HPP
#define GYROSIM_EPSILON_MODEL_HPP

#include <functional>
#include <vector>

#include "gyrosim/ensemble.hpp"

namespace gyrosim {

// Scaled-dynamics model in lab coordinates:
//
//   dX/dt = V / epsilon
//   dV/dt = (omega_c/epsilon) perp(V) - grad phi(X),   phi = sum_k w_k e_delta(. - x_k)
//
// advanced by Strang splitting: half a magnetic rotation, one electric kick,
// half a magnetic rotation.  The magnetic flow is solved exactly (velocities
// rotate by -omega_c dt / epsilon about the fixed guiding centers), so with
// the field disabled the composition is exact for any dt.

struct SplitStepConfig {
  double dt = 1e-2;
  // the kick must sample the gyro phase finely enough; effective_dt caps the
  // step at the scaled cyclotron period divided by this count
  int substeps_per_cyclotron_period = 20;
  // debug switch: drop the electric kick entirely
  bool disable_field = false;

  void validate() const;  // throws std::invalid_argument
  double effective_dt(const PhysicalParams& params) const;
};

// Electric field -grad phi at an arbitrary point; sources exactly at x are
// skipped, so a particle sees the field of the others only.
Vec2 electric_field(const Ensemble& ens, Vec2 x);

// Exact magnetic rotation over dt: every |v| and every guiding center
// x + perp(v)/omega_c is invariant; advances ens.time by dt.
Ensemble cyclotron_substep(const Ensemble& ens, double dt);

// Impulse V_j += dt * E(x_j) with positions frozen; ens.time unchanged.
// Weighted total velocity is preserved (pairwise forces cancel).
Ensemble kick_substep(const Ensemble& ens, double dt);

// One Strang step of size cfg.dt.
Ensemble step_full(const Ensemble& ens, const SplitStepConfig& cfg);

// Same contract as the gyro-model integrate(): marches to t_end with the
// capped step, recording snapshots on the uniform cadence grid.
TrajectoryRecord integrate_full(Ensemble ens, const SplitStepConfig& cfg, double t_end,
                                double snapshot_every,
                                const std::function<void(const Ensemble&)>& observer = {});

// Maps every LabFrame snapshot through to_gyro at its own time stamp,
// producing the record the effective model should approximate.
TrajectoryRecord filtered_trajectory(const TrajectoryRecord& rec);

}  // namespace gyrosim

#endif
