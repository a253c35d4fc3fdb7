#ifndef GYROSIM_INITIAL_CONDITION_HPP
#define GYROSIM_INITIAL_CONDITION_HPP

#include "gyrosim/vec2.hpp"

namespace gyrosim {

// Compactly supported phase-space blobs used to seed both models.  Every
// kind factors into a radial profile in |x - center_x| and one in
// |v - center_v|, vanishing outside radius_x resp. radius_v:
//
//   GaussianBump  gaussian (sigma = radius/3) times a cosine-squared taper
//   CosineBump    plain cosine-squared taper
//   TwoStream     GaussianBump in space; in velocity, two half-radius
//                 GaussianBump lobes at center_v +- (radius_v/2, 0)
//
// The profile is scaled so its exact phase-space integral is total_mass
// (the radial normalization integrals are evaluated once to near machine
// precision at construction of DensityProfile).
enum class ICKind { GaussianBump, CosineBump, TwoStream };

struct InitialCondition {
  ICKind kind = ICKind::GaussianBump;
  Vec2 center_x;
  Vec2 center_v;
  double radius_x = 1.0;
  double radius_v = 1.0;
  double total_mass = 1.0;

  void validate() const;  // throws std::invalid_argument
};

class DensityProfile {
 public:
  explicit DensityProfile(const InitialCondition& ic);

  // f(x, v); exactly zero outside the stated radii
  double operator()(Vec2 x, Vec2 v) const;

  double amplitude() const { return amplitude_; }

 private:
  InitialCondition ic_;
  double amplitude_ = 0.0;
};

}  // namespace gyrosim

#endif
