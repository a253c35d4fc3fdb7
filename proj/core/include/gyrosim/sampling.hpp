#ifndef GYROSIM_SAMPLING_HPP
#define GYROSIM_SAMPLING_HPP

#include <cstdint>

#include "gyrosim/ensemble.hpp"
#include "gyrosim/initial_condition.hpp"

namespace gyrosim {

// Deterministic midpoint-rule sampling of an initial density: an
// n_per_dim^4 tensor grid of cells covering the support box, one marker at
// each cell center carrying weight f(center) * cell volume.  Cells whose
// weight is exactly zero are dropped.  Marker order is the lexicographic
// cell order, so identical inputs give bit-identical ensembles.
//
// jitter > 0 (a fraction of the cell, at most 1) displaces each marker
// uniformly inside its cell using the seeded generator; the default 0 keeps
// the plain midpoint rule.  Returns a LabFrame ensemble at time 0.
Ensemble sample_markers(const InitialCondition& ic, const PhysicalParams& params,
                        int n_per_dim, std::uint64_t seed = 0, double jitter = 0.0);

struct SampledPair {
  Ensemble lab;   // markers as sampled, lab frame, t = 0
  Ensemble gyro;  // the same markers pushed through to_gyro at t = 0
};

SampledPair sample_initial(const InitialCondition& ic, const PhysicalParams& params,
                           int n_per_dim, std::uint64_t seed = 0, double jitter = 0.0);

}  // namespace gyrosim

#endif
