// Shared helpers for the test binaries: analytic two-body orbits and random
// ensemble construction.
#ifndef GYROSIM_TESTS_SUPPORT_HPP
#define GYROSIM_TESTS_SUPPORT_HPP

#include <cmath>
#include <numbers>
#include <random>

#include "gyrosim/ensemble.hpp"
#include "gyrosim/vec2.hpp"

namespace testsupport {

inline double uni(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(g() >> 11) * 0x1.0p-53);
}

// Two markers at distance d with identical velocities: the acceleration
// field vanishes identically and the guiding centers rotate rigidly about
// the weighted centroid, exactly as a classical point-vortex pair.
struct VortexPair {
  gyrosim::Ensemble ens;       // gyro frame, time 0
  gyrosim::Vec2 centroid;      // weighted centroid, constant in time
  double angular_velocity;     // signed rate of the separation vector
  double period;               // 2*pi / |angular_velocity|

  gyrosim::Vec2 exact_pos(std::size_t j, double t) const {
    const double w1 = ens.particles[0].weight;
    const double w2 = ens.particles[1].weight;
    const gyrosim::Vec2 z0 =
        ens.particles[0].pos - ens.particles[1].pos;
    const gyrosim::Vec2 z = gyrosim::rotate(angular_velocity * t, z0);
    if (j == 0) return centroid + (w2 / (w1 + w2)) * z;
    return centroid - (w1 / (w1 + w2)) * z;
  }
};

inline VortexPair make_vortex_pair(gyrosim::Vec2 p1, gyrosim::Vec2 p2,
                                   gyrosim::Vec2 shared_vel, double w1, double w2,
                                   double omega_c) {
  VortexPair vp;
  vp.ens.params.omega_c = omega_c;
  vp.ens.params.delta = 0.0;
  vp.ens.frame = gyrosim::Frame::GyroFrame;
  vp.ens.particles = {{p1, shared_vel, w1}, {p2, shared_vel, w2}};
  vp.centroid = (w1 * p1 + w2 * p2) / (w1 + w2);
  const double d2 = norm_sq(p1 - p2);
  // dz/dt = k perp(z) with k = (w1+w2)/(2 pi omega_c d^2) turns z clockwise
  const double k = (w1 + w2) / (2.0 * std::numbers::pi * omega_c * d2);
  vp.angular_velocity = -k;
  vp.period = 2.0 * std::numbers::pi / std::abs(k);
  return vp;
}

// Velocity-space mirror image: coincident positions, distinct velocities.
// Positions freeze and the velocity separation u rotates counterclockwise
// (for positive weights and omega_c) at rate (w1+w2) omega_c / (2 pi |u|^2).
struct DualPair {
  gyrosim::Ensemble ens;
  gyrosim::Vec2 mean_vel;      // weighted mean velocity, constant
  double angular_velocity;
  double period;

  gyrosim::Vec2 exact_vel(std::size_t j, double t) const {
    const double w1 = ens.particles[0].weight;
    const double w2 = ens.particles[1].weight;
    const gyrosim::Vec2 u0 =
        ens.particles[0].vel - ens.particles[1].vel;
    const gyrosim::Vec2 u = gyrosim::rotate(angular_velocity * t, u0);
    if (j == 0) return mean_vel + (w2 / (w1 + w2)) * u;
    return mean_vel - (w1 / (w1 + w2)) * u;
  }
};

inline DualPair make_dual_pair(gyrosim::Vec2 shared_pos, gyrosim::Vec2 v1,
                               gyrosim::Vec2 v2, double w1, double w2,
                               double omega_c) {
  DualPair dp;
  dp.ens.params.omega_c = omega_c;
  dp.ens.params.delta = 0.0;
  dp.ens.frame = gyrosim::Frame::GyroFrame;
  dp.ens.particles = {{shared_pos, v1, w1}, {shared_pos, v2, w2}};
  dp.mean_vel = (w1 * v1 + w2 * v2) / (w1 + w2);
  const double u2 = norm_sq(v1 - v2);
  dp.angular_velocity = (w1 + w2) * omega_c / (2.0 * std::numbers::pi * u2);
  dp.period = 2.0 * std::numbers::pi / std::abs(dp.angular_velocity);
  return dp;
}

// Random gyro-frame ensemble with mixed gate outcomes.
inline gyrosim::Ensemble random_ensemble(std::mt19937_64& gen, std::size_t n,
                                         double omega_c = 1.0, double delta = 1e-3,
                                         double vel_scale = 1.0) {
  gyrosim::Ensemble ens;
  ens.params.omega_c = omega_c;
  ens.params.delta = delta;
  ens.frame = gyrosim::Frame::GyroFrame;
  ens.particles.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    gyrosim::Particle p;
    p.pos = {uni(gen, -1, 1), uni(gen, -1, 1)};
    p.vel = {vel_scale * uni(gen, -1, 1), vel_scale * uni(gen, -1, 1)};
    p.weight = uni(gen, 0.2, 1.5);
    ens.particles.push_back(p);
  }
  return ens;
}

}  // namespace testsupport

#endif
