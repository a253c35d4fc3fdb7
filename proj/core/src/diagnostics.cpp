#include "gyrosim/diagnostics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gyrosim/kernel.hpp"

namespace gyrosim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_gyro(const Ensemble& ens, const char* who) {
  if (ens.frame != Frame::GyroFrame) {
    throw std::runtime_error(std::string(who) + ": ensemble is not in the gyro frame");
  }
}

}  // namespace

MomentSet moments(const Ensemble& ens) {
  require_gyro(ens, "moments");
  if (ens.particles.empty()) {
    throw std::invalid_argument("moments: empty ensemble");
  }
  MomentSet m;
  for (const Particle& p : ens.particles) {
    m.mass += p.weight;
    m.mean_pos += p.weight * p.pos;
    m.mean_vel += p.weight * p.vel;
    m.pos_sq += p.weight * norm_sq(p.pos);
    m.vel_sq += p.weight * norm_sq(p.vel);
  }
  return m;
}

double electric_energy(const Ensemble& ens) {
  require_gyro(ens, "electric_energy");
  const std::size_t n = ens.size();
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const Particle& pj = ens.particles[j];
      const Particle& pk = ens.particles[k];
      sum += pj.weight * pk.weight *
             gyro_kernel(pj.pos - pk.pos, pj.vel - pk.vel, ens.params);
    }
  }
  return sum;  // (1/2) over ordered pairs = full sum over unordered ones
}

EnergyReport energies(const Ensemble& ens) {
  EnergyReport rep;
  rep.electric = electric_energy(ens);
  for (const Particle& p : ens.particles) {
    rep.kinetic += 0.5 * p.weight * norm_sq(p.vel);
  }
  return rep;
}

double symmetrized_moment_rate(const Ensemble& ens, const PsiGradients& grad_psi) {
  require_gyro(ens, "symmetrized_moment_rate");
  if (!grad_psi) {
    throw std::invalid_argument("symmetrized_moment_rate: missing gradient callback");
  }
  const PhysicalParams& p = ens.params;
  const double d2 = p.delta * p.delta;
  const std::size_t n = ens.size();

  std::vector<GradientPair> grads(n);
  for (std::size_t j = 0; j < n; ++j) {
    grads[j] = grad_psi(ens.particles[j].pos, ens.particles[j].vel);
  }

  double rate = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const Particle& pj = ens.particles[j];
    for (std::size_t k = j + 1; k < n; ++k) {
      const Particle& pk = ens.particles[k];
      const Vec2 xi = pj.pos - pk.pos;
      const Vec2 eta = pj.vel - pk.vel;
      const double gate2 = norm_sq(eta) / (p.omega_c * p.omega_c);
      const double xi2 = norm_sq(xi);
      const double ww = pj.weight * pk.weight;
      if (xi2 <= gate2) {
        const double den = gate2 + d2;
        if (den == 0.0) {
          throw std::domain_error("symmetrized_moment_rate: coincident pair, delta = 0");
        }
        // velocity branch: (grad_v psi_j - grad_v psi_k) . perp(grad e)(eta/omega_c)
        const Vec2 g = (-1.0 / (kTwoPi * p.omega_c * den)) * perp(eta);
        rate += 2.0 * ww * dot(grads[j].second - grads[k].second, g);
      } else {
        // position branch: (1/omega_c)(grad_x psi_k - grad_x psi_j) . perp(grad e)(xi)
        const Vec2 g = (-1.0 / (kTwoPi * (xi2 + d2))) * perp(xi);
        rate += (2.0 / p.omega_c) * ww * dot(grads[k].first - grads[j].first, g);
      }
    }
  }
  return rate;
}

double trajectory_error(const TrajectoryRecord& a, const TrajectoryRecord& b,
                        TrajectoryMetric metric) {
  if (a.snapshots.size() != b.snapshots.size()) {
    throw std::invalid_argument("trajectory_error: snapshot counts differ");
  }
  double worst = 0.0;
  for (std::size_t s = 0; s < a.snapshots.size(); ++s) {
    const Ensemble& ea = a.snapshots[s];
    const Ensemble& eb = b.snapshots[s];
    require_gyro(ea, "trajectory_error");
    require_gyro(eb, "trajectory_error");
    if (ea.size() != eb.size()) {
      throw std::invalid_argument("trajectory_error: particle counts differ");
    }
    if (std::abs(ea.time - eb.time) > 1e-9 * std::max(1.0, std::abs(ea.time))) {
      throw std::invalid_argument("trajectory_error: snapshot times differ");
    }
    if (metric == TrajectoryMetric::WeightedRms) {
      double num = 0.0, den = 0.0;
      for (std::size_t j = 0; j < ea.size(); ++j) {
        const double d2 = norm_sq(ea.particles[j].pos - eb.particles[j].pos) +
                          norm_sq(ea.particles[j].vel - eb.particles[j].vel);
        num += ea.particles[j].weight * d2;
        den += ea.particles[j].weight;
      }
      worst = std::max(worst, std::sqrt(num / den));
    } else {
      for (std::size_t j = 0; j < ea.size(); ++j) {
        const double d2 = norm_sq(ea.particles[j].pos - eb.particles[j].pos) +
                          norm_sq(ea.particles[j].vel - eb.particles[j].vel);
        worst = std::max(worst, std::sqrt(d2));
      }
    }
  }
  return worst;
}

}  // namespace gyrosim
