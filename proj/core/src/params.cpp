#include "gyrosim/params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gyrosim {

void PhysicalParams::validate() const {
  if (!std::isfinite(omega_c) || omega_c == 0.0) {
    throw std::invalid_argument("PhysicalParams: omega_c must be finite and nonzero");
  }
  if (!std::isfinite(epsilon) || epsilon <= 0.0) {
    throw std::invalid_argument("PhysicalParams: epsilon must be finite and positive");
  }
  if (!std::isfinite(delta) || delta < 0.0) {
    throw std::invalid_argument("PhysicalParams: delta must be finite and nonnegative");
  }
}

double PhysicalParams::cyclotron_period() const {
  return 2.0 * std::numbers::pi / omega_c;
}

double PhysicalParams::scaled_cyclotron_period() const {
  return epsilon * cyclotron_period();
}

}  // namespace gyrosim
