#include "gyrosim/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gyrosim {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;
}  // namespace

double fundamental_solution(Vec2 z, double delta) {
  const double r2 = norm_sq(z) + delta * delta;
  if (r2 == 0.0) {
    throw std::domain_error("fundamental_solution: evaluated at the singularity");
  }
  return -std::log(r2) / kFourPi;
}

Vec2 grad_fundamental(Vec2 z, double delta) {
  const double r2 = norm_sq(z) + delta * delta;
  if (r2 == 0.0) {
    throw std::domain_error("grad_fundamental: evaluated at the singularity");
  }
  return (-1.0 / (kTwoPi * r2)) * z;
}

double gyro_kernel(Vec2 xi, Vec2 eta, const PhysicalParams& params) {
  // branch on the unregularized radii; delta only smooths e itself
  const double gate2 = norm_sq(eta) / (params.omega_c * params.omega_c);
  if (norm_sq(xi) <= gate2) {
    return fundamental_solution(eta / params.omega_c, params.delta);
  }
  return fundamental_solution(xi, params.delta);
}

KernelEval gyro_kernel_gradients(Vec2 xi, Vec2 eta, const PhysicalParams& params) {
  const double gate2 = norm_sq(eta) / (params.omega_c * params.omega_c);
  KernelEval out;
  if (norm_sq(xi) <= gate2) {
    const Vec2 arg = eta / params.omega_c;
    out.value = fundamental_solution(arg, params.delta);
    out.grad_eta = grad_fundamental(arg, params.delta) / params.omega_c;
  } else {
    out.value = fundamental_solution(xi, params.delta);
    out.grad_xi = grad_fundamental(xi, params.delta);
  }
  return out;
}

double gyro_average_oracle(Vec2 xi, Vec2 eta, const PhysicalParams& params,
                           int n_nodes) {
  if (n_nodes < 8) {
    throw std::invalid_argument("gyro_average_oracle: n_nodes must be >= 8");
  }
  const Vec2 q = perp(eta) / params.omega_c;
  double sum = 0.0;
  for (int i = 0; i < n_nodes; ++i) {
    const double theta = kTwoPi * static_cast<double>(i) / n_nodes;
    const Vec2 arg = xi - rotate(theta, q);
    if (params.delta == 0.0 && norm_sq(arg) < 1e-24) {
      throw std::domain_error(
          "gyro_average_oracle: quadrature node within 1e-12 of the singularity");
    }
    sum += fundamental_solution(arg, params.delta);
  }
  return sum / n_nodes;
}

}  // namespace gyrosim
