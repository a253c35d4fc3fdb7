#ifndef GYROSIM_KERNEL_HPP
#define GYROSIM_KERNEL_HPP

#include "gyrosim/params.hpp"
#include "gyrosim/vec2.hpp"

namespace gyrosim {

// Free-space log kernel of the 2D Poisson problem and its gyro average.
//
// The base kernel is e(z) = -log|z| / (2 pi).  With blob regularization
// delta > 0 the singularity is smoothed by |z| -> sqrt(|z|^2 + delta^2):
//
//   e_delta(z)      = -log(|z|^2 + delta^2) / (4 pi)
//   grad e_delta(z) = -z / (2 pi (|z|^2 + delta^2))
//
// The gyro average of e over one cyclotron rotation,
//
//   E(xi, eta) = (1/2pi) \int_0^{2pi} e(xi - R(theta) perp(eta)/omega_c) dtheta,
//
// collapses to a sharp two-branch form because e is harmonic away from the
// origin and the average of log over a circle of radius r centered at c is
// log(max(r, |c|)):
//
//   E(xi, eta) = e(eta/omega_c)  if |xi| <= |eta|/|omega_c|   (near branch)
//              = e(xi)           if |xi| >  |eta|/|omega_c|   (far branch)
//
// Regularization enters only through e; the branch radii stay sharp.

// Value of e_delta(z).  Throws std::domain_error at z = 0 with delta = 0.
double fundamental_solution(Vec2 z, double delta);

// Gradient of e_delta(z).  Same domain restriction as the value.
Vec2 grad_fundamental(Vec2 z, double delta);

// Gyro-averaged kernel E(xi, eta) in closed form, with params.delta applied
// inside e.  Throws std::domain_error when the active branch is singular
// (only possible with delta = 0).
double gyro_kernel(Vec2 xi, Vec2 eta, const PhysicalParams& params);

struct KernelEval {
  double value = 0.0;
  Vec2 grad_xi;   // (grad e_delta)(xi) on the far branch, else zero
  Vec2 grad_eta;  // (grad e_delta)(eta/omega_c)/omega_c on the near branch, else zero
};

// Value and both partial gradients of E.  The inactive branch gradient is an
// exact zero and its (possibly singular) kernel argument is never evaluated.
KernelEval gyro_kernel_gradients(Vec2 xi, Vec2 eta, const PhysicalParams& params);

// Independent check of the closed form: trapezoidal average of e over the
// circle xi - R(theta) perp(eta)/omega_c, theta equispaced with n_nodes >= 8
// points.  Periodic trapezoid, so convergence in n_nodes is spectral with
// rate set by the ratio |xi| : |eta|/|omega_c| (slow near the branch circle).
// Throws std::invalid_argument for n_nodes < 8 and std::domain_error if a
// node falls within 1e-12 of the singularity with delta = 0.
double gyro_average_oracle(Vec2 xi, Vec2 eta, const PhysicalParams& params,
                           int n_nodes);

}  // namespace gyrosim

#endif
