#include "gyrosim/gyro_transform.hpp"

#include <stdexcept>

namespace gyrosim {

PhasePoint to_gyro(Vec2 x, Vec2 v, const PhysicalParams& params, double t) {
  const double phase = params.omega_c * t / params.epsilon;
  return {x + perp(v) / params.omega_c, rotate(phase, v)};
}

PhasePoint from_gyro(Vec2 xt, Vec2 vt, const PhysicalParams& params, double t) {
  const double phase = params.omega_c * t / params.epsilon;
  const Vec2 v = rotate(-phase, vt);
  return {xt - perp(v) / params.omega_c, v};
}

Ensemble to_gyro(const Ensemble& lab) {
  if (lab.frame != Frame::LabFrame) {
    throw std::runtime_error("to_gyro: ensemble is not in the lab frame");
  }
  Ensemble out = lab;
  out.frame = Frame::GyroFrame;
  for (Particle& p : out.particles) {
    const PhasePoint g = to_gyro(p.pos, p.vel, lab.params, lab.time);
    p.pos = g.pos;
    p.vel = g.vel;
  }
  return out;
}

}  // namespace gyrosim
