#ifndef GYROSIM_LIMIT_MODEL_HPP
#define GYROSIM_LIMIT_MODEL_HPP

#include <functional>
#include <vector>

#include "gyrosim/ensemble.hpp"
#include "gyrosim/kernel.hpp"

namespace gyrosim {

// Effective dynamics in gyro coordinates.  Each particle sees the gated
// pairwise kernel E through two divergence-free fields:
//
//   d/dt x~_j = V_j = -(1/omega_c) sum_k w_k perp(grad e)(x~_j - x~_k)
//                       [active when |x~_j - x~_k| >  |v~_j - v~_k|/|omega_c|]
//   d/dt v~_j = A_j =  sum_k w_k perp(grad e)((v~_j - v~_k)/omega_c)
//                       [active when |x~_j - x~_k| <= |v~_j - v~_k|/|omega_c|]
//
// with k != j and grad e regularized by params.delta.  Equivalently
// V = -perp(grad_x phi~)/omega_c and A = omega_c perp(grad_v phi~) for the
// pairwise potential phi~ built from gyro_kernel.

struct FieldSample {
  Vec2 velocity;      // guiding-center drift V
  Vec2 acceleration;  // rotated-velocity drift A
};

enum class Scheme { RK4, ImplicitMidpoint };

struct IntegratorConfig {
  Scheme scheme = Scheme::RK4;
  double dt = 1e-3;
  // fixed-point controls for the implicit midpoint scheme
  double midpoint_tol = 1e-13;
  int midpoint_max_iters = 200;  // reaches tol even when (dt/2)*Lipschitz ~ 0.9
  // debug switch: evolve with both fields forced to zero
  bool disable_field = false;

  void validate() const;  // throws std::invalid_argument
};

// Pairwise potential at an arbitrary gyro phase point.  Particles exactly
// coincident with the query point (both pos and vel) are skipped, so the
// potential seen by particle j is potential_tilde at its own phase point.
double potential_tilde(const Ensemble& ens, Vec2 xt, Vec2 vt);

// Both fields at an arbitrary phase point, same self-exclusion rule.
FieldSample field_at(const Ensemble& ens, Vec2 xt, Vec2 vt);

// Fields at particle j, excluding k == j by index.
Vec2 velocity_field(const Ensemble& ens, std::size_t j);
Vec2 acceleration_field(const Ensemble& ens, std::size_t j);

// One fused sweep over all ordered pairs; what the integrators call.
std::vector<FieldSample> all_fields(const Ensemble& ens);

// Advance by cfg.dt with the configured scheme.  Fields are recomputed at
// every internal stage.  Implicit midpoint iterates to cfg.midpoint_tol; if a
// pair crossing its near/far gate leaves the iteration cycling, the step is
// redone with every pair's branch pinned at the step's start state (the
// pinned field is smooth, so the iteration contracts again).  Throws
// std::runtime_error only if even the pinned iteration exhausts
// cfg.midpoint_max_iters.
Ensemble step(const Ensemble& ens, const IntegratorConfig& cfg);

// March from ens.time to t_end, recording snapshots on the uniform grid
// ens.time + i * snapshot_every (plus t_end).  Steps are clamped so every
// snapshot time is hit exactly; recorded times are assigned from the grid,
// which keeps them bit-identical across models sharing the cadence.
// The optional observer runs on each recorded snapshot.
TrajectoryRecord integrate(Ensemble ens, const IntegratorConfig& cfg, double t_end,
                           double snapshot_every,
                           const std::function<void(const Ensemble&)>& observer = {});

}  // namespace gyrosim

#endif
