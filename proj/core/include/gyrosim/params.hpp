#ifndef GYROSIM_PARAMS_HPP
#define GYROSIM_PARAMS_HPP

namespace gyrosim {

// Physical constants shared by both dynamical models.
//
// omega_c  cyclotron frequency, may be negative but never zero
// epsilon  scale-separation parameter; only the full model depends on it
// delta    blob-regularization length applied inside the log kernel and its
//          gradient (never to the interaction gate radii); 0 = singular kernel
struct PhysicalParams {
  double omega_c = 1.0;
  double epsilon = 1.0;
  double delta = 0.0;

  // throws std::invalid_argument naming the offending field
  void validate() const;

  // unscaled cyclotron period T_c (carries the sign of omega_c)
  double cyclotron_period() const;
  // gyration period of the full model, epsilon * T_c
  double scaled_cyclotron_period() const;
};

}  // namespace gyrosim

#endif
