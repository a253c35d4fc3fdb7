#include "gyrosim/vec2.hpp"

#include <numbers>

namespace gyrosim {

Vec2 rotate(double theta, Vec2 v) {
  if (std::abs(theta) > 1e8) {
    theta = std::remainder(theta, 2.0 * std::numbers::pi);
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

}  // namespace gyrosim
