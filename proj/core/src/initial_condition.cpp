#include "gyrosim/initial_condition.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gyrosim {

namespace {

constexpr double kPi = std::numbers::pi;

// cosine-squared taper, exactly zero from s = 1 on
double taper(double s) {
  if (s >= 1.0) return 0.0;
  const double c = std::cos(0.5 * kPi * s);
  return c * c;
}

double gauss_bump(double s) {
  if (s >= 1.0) return 0.0;
  return std::exp(-4.5 * s * s) * taper(s);
}

// 2 pi R^2 \int_0^1 g(s) s ds by composite Simpson; g is smooth on [0, 1]
template <typename G>
double radial_mass(double radius, G g) {
  constexpr int kPanels = 1 << 13;
  const double h = 1.0 / kPanels;
  double sum = 0.0;
  for (int i = 0; i < kPanels; ++i) {
    const double a = i * h;
    const double m = a + 0.5 * h;
    const double b = a + h;
    sum += (h / 6.0) * (g(a) * a + 4.0 * g(m) * m + g(b) * b);
  }
  return 2.0 * kPi * radius * radius * sum;
}

}  // namespace

void InitialCondition::validate() const {
  if (!std::isfinite(center_x.x) || !std::isfinite(center_x.y) ||
      !std::isfinite(center_v.x) || !std::isfinite(center_v.y)) {
    throw std::invalid_argument("InitialCondition: centers must be finite");
  }
  if (!std::isfinite(radius_x) || radius_x <= 0.0) {
    throw std::invalid_argument("InitialCondition: radius_x must be positive");
  }
  if (!std::isfinite(radius_v) || radius_v <= 0.0) {
    throw std::invalid_argument("InitialCondition: radius_v must be positive");
  }
  if (!std::isfinite(total_mass) || total_mass <= 0.0) {
    throw std::invalid_argument("InitialCondition: total_mass must be positive");
  }
}

DensityProfile::DensityProfile(const InitialCondition& ic) : ic_(ic) {
  ic.validate();
  double mass_x = 0.0, mass_v = 0.0;
  switch (ic_.kind) {
    case ICKind::GaussianBump:
      mass_x = radial_mass(ic_.radius_x, gauss_bump);
      mass_v = radial_mass(ic_.radius_v, gauss_bump);
      break;
    case ICKind::CosineBump:
      mass_x = radial_mass(ic_.radius_x, taper);
      mass_v = radial_mass(ic_.radius_v, taper);
      break;
    case ICKind::TwoStream:
      mass_x = radial_mass(ic_.radius_x, gauss_bump);
      mass_v = 2.0 * radial_mass(0.5 * ic_.radius_v, gauss_bump);
      break;
  }
  amplitude_ = ic_.total_mass / (mass_x * mass_v);
}

double DensityProfile::operator()(Vec2 x, Vec2 v) const {
  const double sx = norm(x - ic_.center_x) / ic_.radius_x;
  double fx = 0.0, fv = 0.0;
  switch (ic_.kind) {
    case ICKind::GaussianBump: {
      fx = gauss_bump(sx);
      fv = gauss_bump(norm(v - ic_.center_v) / ic_.radius_v);
      break;
    }
    case ICKind::CosineBump: {
      fx = taper(sx);
      fv = taper(norm(v - ic_.center_v) / ic_.radius_v);
      break;
    }
    case ICKind::TwoStream: {
      fx = gauss_bump(sx);
      const double rl = 0.5 * ic_.radius_v;
      const Vec2 offset{0.5 * ic_.radius_v, 0.0};
      fv = gauss_bump(norm(v - (ic_.center_v + offset)) / rl) +
           gauss_bump(norm(v - (ic_.center_v - offset)) / rl);
      break;
    }
  }
  return amplitude_ * fx * fv;
}

}  // namespace gyrosim
