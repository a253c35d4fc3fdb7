#ifndef GYROSIM_DIAGNOSTICS_HPP
#define GYROSIM_DIAGNOSTICS_HPP

#include <functional>
#include <utility>

#include "gyrosim/ensemble.hpp"

namespace gyrosim {

// Conserved functionals of the effective dynamics.  All diagnostics operate
// on gyro-frame ensembles and refuse lab-frame input, so full-model output
// must be filtered first.

// Weighted sums sum_j w_j psi(x~_j, v~_j) for psi in
// {1, x~, v~, |x~|^2, |v~|^2}; note these are totals, not averages.
struct MomentSet {
  double mass = 0.0;
  Vec2 mean_pos;
  Vec2 mean_vel;
  double pos_sq = 0.0;
  double vel_sq = 0.0;
};

struct EnergyReport {
  double electric = 0.0;  // (1/2) sum_{j != k} w_j w_k E(x~_j - x~_k, v~_j - v~_k)
  double kinetic = 0.0;   // (1/2) sum_j w_j |v~_j|^2
};

// Throws std::invalid_argument on an empty ensemble, std::runtime_error on a
// lab-frame one.
MomentSet moments(const Ensemble& ens);

double electric_energy(const Ensemble& ens);
EnergyReport energies(const Ensemble& ens);

// Gradients of a test function psi at a gyro phase point: first the position
// gradient, then the velocity gradient.
using GradientPair = std::pair<Vec2, Vec2>;
using PsiGradients = std::function<GradientPair(Vec2 xt, Vec2 vt)>;

// Pair-symmetrized production rate of the moment sum_j w_j psi_j; equals
// twice d/dt of that moment along the effective flow.  For psi in the
// conserved family the summand vanishes pair by pair: constant gradients
// cancel by antisymmetry and linear ones by orthogonality of perp(grad e)(z)
// to z.  Gate convention matches the field evaluation (near branch on ties).
double symmetrized_moment_rate(const Ensemble& ens, const PsiGradients& grad_psi);

enum class TrajectoryMetric { WeightedRms, MaxParticle };

// Sup over matched snapshots of the phase-space distance between two
// gyro-frame records (positions and velocities on equal footing).  The
// default per-snapshot metric is a weight-averaged RMS; MaxParticle takes
// the worst particle instead.  Throws std::invalid_argument when snapshot
// counts, particle counts, or times disagree, std::runtime_error on frames.
double trajectory_error(const TrajectoryRecord& a, const TrajectoryRecord& b,
                        TrajectoryMetric metric = TrajectoryMetric::WeightedRms);

}  // namespace gyrosim

#endif
