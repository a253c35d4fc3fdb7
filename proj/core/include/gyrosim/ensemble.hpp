#ifndef GYROSIM_ENSEMBLE_HPP
#define GYROSIM_ENSEMBLE_HPP

#include <cstddef>
#include <vector>

#include "gyrosim/params.hpp"
#include "gyrosim/vec2.hpp"

namespace gyrosim {

struct Particle {
  Vec2 pos;
  Vec2 vel;
  double weight = 1.0;
};

// Which coordinates the particle state lives in.  The full model evolves lab
// coordinates (x, v); the effective model evolves gyro coordinates
// (guiding center, rotated velocity).  Diagnostics refuse to mix the two.
enum class Frame { GyroFrame, LabFrame };

struct Ensemble {
  std::vector<Particle> particles;
  PhysicalParams params;
  double time = 0.0;
  Frame frame = Frame::GyroFrame;

  std::size_t size() const { return particles.size(); }

  // weights positive and all components finite; throws std::invalid_argument
  void validate() const;
};

// Time series of snapshots produced by the integrators.  Each snapshot is a
// full ensemble copy carrying its own time stamp.
struct TrajectoryRecord {
  std::vector<Ensemble> snapshots;
};

}  // namespace gyrosim

#endif
