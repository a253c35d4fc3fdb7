#include "gyrosim/ensemble.hpp"

#include <cmath>
#include <stdexcept>

namespace gyrosim {

void Ensemble::validate() const {
  params.validate();
  if (!std::isfinite(time)) {
    throw std::invalid_argument("Ensemble: time must be finite");
  }
  for (const Particle& p : particles) {
    if (!std::isfinite(p.pos.x) || !std::isfinite(p.pos.y) ||
        !std::isfinite(p.vel.x) || !std::isfinite(p.vel.y)) {
      throw std::invalid_argument("Ensemble: particle state must be finite");
    }
    if (!std::isfinite(p.weight) || p.weight <= 0.0) {
      throw std::invalid_argument("Ensemble: particle weight must be positive");
    }
  }
}

}  // namespace gyrosim
