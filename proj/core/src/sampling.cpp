#include "gyrosim/sampling.hpp"

#include <random>
#include <stdexcept>

#include "gyrosim/gyro_transform.hpp"

namespace gyrosim {

namespace {

// uniform in [-0.5, 0.5], built from raw 64-bit draws so the stream does not
// depend on library distribution internals
double centered_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53 - 0.5;
}

}  // namespace

Ensemble sample_markers(const InitialCondition& ic, const PhysicalParams& params,
                        int n_per_dim, std::uint64_t seed, double jitter) {
  ic.validate();
  params.validate();
  if (n_per_dim < 2) {
    throw std::invalid_argument("sample_markers: n_per_dim must be >= 2");
  }
  if (!(jitter >= 0.0) || jitter > 1.0) {
    throw std::invalid_argument("sample_markers: jitter must lie in [0, 1]");
  }

  const DensityProfile density(ic);
  const int n = n_per_dim;
  const double hx = 2.0 * ic.radius_x / n;
  const double hv = 2.0 * ic.radius_v / n;
  const double cell_volume = hx * hx * hv * hv;
  const Vec2 x0 = ic.center_x - Vec2{ic.radius_x, ic.radius_x};
  const Vec2 v0 = ic.center_v - Vec2{ic.radius_v, ic.radius_v};

  std::mt19937_64 gen(seed);
  Ensemble ens;
  ens.params = params;
  ens.time = 0.0;
  ens.frame = Frame::LabFrame;
  // disk-in-square fill fraction per plane is pi/4; reserve a bit above that
  const double cells = static_cast<double>(n) * n * n * n;
  ens.particles.reserve(static_cast<std::size_t>(cells * 0.65) + 16);
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      for (int j1 = 0; j1 < n; ++j1) {
        for (int j2 = 0; j2 < n; ++j2) {
          Vec2 x{x0.x + (i1 + 0.5) * hx, x0.y + (i2 + 0.5) * hx};
          Vec2 v{v0.x + (j1 + 0.5) * hv, v0.y + (j2 + 0.5) * hv};
          if (jitter > 0.0) {
            x.x += jitter * hx * centered_uniform(gen);
            x.y += jitter * hx * centered_uniform(gen);
            v.x += jitter * hv * centered_uniform(gen);
            v.y += jitter * hv * centered_uniform(gen);
          }
          const double w = density(x, v) * cell_volume;
          if (w > 0.0) {
            ens.particles.push_back({x, v, w});
          }
        }
      }
    }
  }
  return ens;
}

SampledPair sample_initial(const InitialCondition& ic, const PhysicalParams& params,
                           int n_per_dim, std::uint64_t seed, double jitter) {
  SampledPair out;
  out.lab = sample_markers(ic, params, n_per_dim, seed, jitter);
  out.gyro = to_gyro(out.lab);
  return out;
}

}  // namespace gyrosim
