#ifndef GYROSIM_GYRO_TRANSFORM_HPP
#define GYROSIM_GYRO_TRANSFORM_HPP

#include "gyrosim/ensemble.hpp"
#include "gyrosim/params.hpp"
#include "gyrosim/vec2.hpp"

namespace gyrosim {

struct PhasePoint {
  Vec2 pos;
  Vec2 vel;
};

// Lab coordinates (x, v) at time t to gyro coordinates:
//   guiding center  x~ = x + perp(v)/omega_c
//   rotated velocity v~ = R(omega_c t / epsilon) v
// The map is volume preserving (unit Jacobian) for every fixed t.
PhasePoint to_gyro(Vec2 x, Vec2 v, const PhysicalParams& params, double t);

// Exact inverse of to_gyro at the same time t.
PhasePoint from_gyro(Vec2 xt, Vec2 vt, const PhysicalParams& params, double t);

// Whole-ensemble filter: maps a LabFrame ensemble through to_gyro at its own
// time stamp.  Throws std::runtime_error if the ensemble is already gyro.
Ensemble to_gyro(const Ensemble& lab);

}  // namespace gyrosim

#endif
