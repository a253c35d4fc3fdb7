#include "gyrosim/limit_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gyrosim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_gyro(const Ensemble& ens, const char* who) {
  if (ens.frame != Frame::GyroFrame) {
    throw std::runtime_error(std::string(who) + ": ensemble is not in the gyro frame");
  }
}

// Contribution of one source (weight w, separation xi = x~ - x~_k,
// eta = v~ - v~_k) to the two fields.  Exactly one branch is active; the
// inactive one is an exact zero and its kernel argument is never touched.
inline void accumulate_pair(Vec2 xi, Vec2 eta, double w,
                            const PhysicalParams& p, Vec2& vel, Vec2& acc) {
  const double gate2 = norm_sq(eta) / (p.omega_c * p.omega_c);
  const double xi2 = norm_sq(xi);
  const double d2 = p.delta * p.delta;
  if (xi2 <= gate2) {
    const double den = gate2 + d2;
    if (den == 0.0) {
      throw std::domain_error("limit model: coincident pair with delta = 0");
    }
    acc += (-w / (kTwoPi * p.omega_c * den)) * perp(eta);
  } else {
    vel += (w / (kTwoPi * p.omega_c * (xi2 + d2))) * perp(xi);
  }
}

Ensemble advanced(const Ensemble& base, const std::vector<FieldSample>& k, double h) {
  Ensemble out = base;
  for (std::size_t j = 0; j < out.size(); ++j) {
    out.particles[j].pos += h * k[j].velocity;
    out.particles[j].vel += h * k[j].acceleration;
  }
  return out;
}

std::vector<FieldSample> zero_fields(std::size_t n) {
  return std::vector<FieldSample>(n);
}

std::vector<FieldSample> fields_for(const Ensemble& ens, const IntegratorConfig& cfg) {
  if (cfg.disable_field) return zero_fields(ens.size());
  return all_fields(ens);
}

Ensemble step_rk4(const Ensemble& ens, const IntegratorConfig& cfg, double h) {
  const std::vector<FieldSample> k1 = fields_for(ens, cfg);
  const std::vector<FieldSample> k2 = fields_for(advanced(ens, k1, 0.5 * h), cfg);
  const std::vector<FieldSample> k3 = fields_for(advanced(ens, k2, 0.5 * h), cfg);
  const std::vector<FieldSample> k4 = fields_for(advanced(ens, k3, h), cfg);
  Ensemble out = ens;
  for (std::size_t j = 0; j < out.size(); ++j) {
    const Vec2 dv = k1[j].velocity + 2.0 * k2[j].velocity + 2.0 * k3[j].velocity +
                    k4[j].velocity;
    const Vec2 da = k1[j].acceleration + 2.0 * k2[j].acceleration +
                    2.0 * k3[j].acceleration + k4[j].acceleration;
    out.particles[j].pos += (h / 6.0) * dv;
    out.particles[j].vel += (h / 6.0) * da;
  }
  out.time += h;
  return out;
}

// Branch choice per unordered pair (j < k, row-major), frozen at one state.
std::vector<char> gate_bits(const Ensemble& ens) {
  const double wc = ens.params.omega_c;
  std::vector<char> near;
  near.reserve(ens.size() * (ens.size() - 1) / 2);
  for (std::size_t j = 0; j < ens.size(); ++j) {
    for (std::size_t k = j + 1; k < ens.size(); ++k) {
      const Vec2 xi = ens.particles[j].pos - ens.particles[k].pos;
      const Vec2 eta = ens.particles[j].vel - ens.particles[k].vel;
      near.push_back(norm_sq(xi) <= norm_sq(eta) / (wc * wc) ? 1 : 0);
    }
  }
  return near;
}

// all_fields with the near/far decision taken from `near` instead of the
// live gate; the branch formulas still use the live coordinates.
std::vector<FieldSample> all_fields_pinned(const Ensemble& ens,
                                           const std::vector<char>& near) {
  const std::size_t n = ens.size();
  const PhysicalParams& p = ens.params;
  const double d2 = p.delta * p.delta;
  const double wc = p.omega_c;
  std::vector<FieldSample> out(n);
  std::size_t idx = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const Particle& pj = ens.particles[j];
    for (std::size_t k = j + 1; k < n; ++k, ++idx) {
      const Particle& pk = ens.particles[k];
      const Vec2 xi = pj.pos - pk.pos;
      const Vec2 eta = pj.vel - pk.vel;
      if (near[idx]) {
        const double den = norm_sq(eta) / (wc * wc) + d2;
        if (den == 0.0) {
          throw std::domain_error("limit model: coincident pair with delta = 0");
        }
        const double c = 1.0 / (kTwoPi * wc * den);
        const Vec2 pe = perp(eta);
        out[j].acceleration += (-pk.weight * c) * pe;
        out[k].acceleration += (pj.weight * c) * pe;
      } else {
        const double c = 1.0 / (kTwoPi * wc * (norm_sq(xi) + d2));
        const Vec2 px = perp(xi);
        out[j].velocity += (pk.weight * c) * px;
        out[k].velocity += (-pj.weight * c) * px;
      }
    }
  }
  return out;
}

template <typename Fields>
bool solve_midpoint(const Ensemble& ens, const IntegratorConfig& cfg, double h,
                    Fields fields, Ensemble& mid) {
  mid = advanced(ens, fields(ens), 0.5 * h);
  for (int it = 0; it < cfg.midpoint_max_iters; ++it) {
    const Ensemble next = advanced(ens, fields(mid), 0.5 * h);
    double delta = 0.0;
    for (std::size_t j = 0; j < ens.size(); ++j) {
      delta = std::max(delta, std::abs(next.particles[j].pos.x - mid.particles[j].pos.x));
      delta = std::max(delta, std::abs(next.particles[j].pos.y - mid.particles[j].pos.y));
      delta = std::max(delta, std::abs(next.particles[j].vel.x - mid.particles[j].vel.x));
      delta = std::max(delta, std::abs(next.particles[j].vel.y - mid.particles[j].vel.y));
    }
    mid = next;
    if (delta <= cfg.midpoint_tol) return true;
  }
  return false;
}

Ensemble step_midpoint(const Ensemble& ens, const IntegratorConfig& cfg, double h) {
  // solve y* = y + (h/2) F(y*) by fixed-point iteration, then y' = 2 y* - y
  Ensemble mid;
  bool converged = solve_midpoint(
      ens, cfg, h, [&](const Ensemble& e) { return fields_for(e, cfg); }, mid);
  if (!converged && !cfg.disable_field) {
    // The fields jump when a pair crosses its near/far gate, so a step that
    // straddles a gate can leave the iteration cycling between branches with
    // no solution on either side.  Redo the step with every pair's branch
    // pinned at the step's start state; the pinned field is smooth and the
    // usual contraction argument applies.  Both branches conserve the same
    // invariants, so the rescue does not leak mass, momentum, or energy.
    const std::vector<char> near = gate_bits(ens);
    converged = solve_midpoint(
        ens, cfg, h, [&](const Ensemble& e) { return all_fields_pinned(e, near); },
        mid);
  }
  if (!converged) {
    throw std::runtime_error("implicit midpoint: fixed-point iteration did not converge");
  }
  Ensemble out = ens;
  for (std::size_t j = 0; j < out.size(); ++j) {
    out.particles[j].pos = 2.0 * mid.particles[j].pos - ens.particles[j].pos;
    out.particles[j].vel = 2.0 * mid.particles[j].vel - ens.particles[j].vel;
  }
  out.time += h;
  return out;
}

Ensemble step_with(const Ensemble& ens, const IntegratorConfig& cfg, double h) {
  if (cfg.scheme == Scheme::RK4) return step_rk4(ens, cfg, h);
  return step_midpoint(ens, cfg, h);
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!std::isfinite(dt) || dt <= 0.0) {
    throw std::invalid_argument("IntegratorConfig: dt must be finite and positive");
  }
  if (!std::isfinite(midpoint_tol) || midpoint_tol <= 0.0) {
    throw std::invalid_argument("IntegratorConfig: midpoint_tol must be positive");
  }
  if (midpoint_max_iters < 1) {
    throw std::invalid_argument("IntegratorConfig: midpoint_max_iters must be >= 1");
  }
}

double potential_tilde(const Ensemble& ens, Vec2 xt, Vec2 vt) {
  require_gyro(ens, "potential_tilde");
  double sum = 0.0;
  for (const Particle& p : ens.particles) {
    if (p.pos == xt && p.vel == vt) continue;  // self term
    sum += p.weight * gyro_kernel(xt - p.pos, vt - p.vel, ens.params);
  }
  return sum;
}

FieldSample field_at(const Ensemble& ens, Vec2 xt, Vec2 vt) {
  require_gyro(ens, "field_at");
  FieldSample out;
  for (const Particle& p : ens.particles) {
    if (p.pos == xt && p.vel == vt) continue;
    accumulate_pair(xt - p.pos, vt - p.vel, p.weight, ens.params, out.velocity,
                    out.acceleration);
  }
  return out;
}

Vec2 velocity_field(const Ensemble& ens, std::size_t j) {
  require_gyro(ens, "velocity_field");
  const Particle& pj = ens.particles.at(j);
  Vec2 vel, acc;
  for (std::size_t k = 0; k < ens.size(); ++k) {
    if (k == j) continue;
    const Particle& pk = ens.particles[k];
    accumulate_pair(pj.pos - pk.pos, pj.vel - pk.vel, pk.weight, ens.params, vel, acc);
  }
  return vel;
}

Vec2 acceleration_field(const Ensemble& ens, std::size_t j) {
  require_gyro(ens, "acceleration_field");
  const Particle& pj = ens.particles.at(j);
  Vec2 vel, acc;
  for (std::size_t k = 0; k < ens.size(); ++k) {
    if (k == j) continue;
    const Particle& pk = ens.particles[k];
    accumulate_pair(pj.pos - pk.pos, pj.vel - pk.vel, pk.weight, ens.params, vel, acc);
  }
  return acc;
}

std::vector<FieldSample> all_fields(const Ensemble& ens) {
  require_gyro(ens, "all_fields");
  const std::size_t n = ens.size();
  const PhysicalParams& p = ens.params;
  const double d2 = p.delta * p.delta;
  const double wc = p.omega_c;
  std::vector<FieldSample> out(n);
  // one pass over unordered pairs; the reverse pair reuses the same norms
  for (std::size_t j = 0; j < n; ++j) {
    const Particle& pj = ens.particles[j];
    for (std::size_t k = j + 1; k < n; ++k) {
      const Particle& pk = ens.particles[k];
      const Vec2 xi = pj.pos - pk.pos;
      const Vec2 eta = pj.vel - pk.vel;
      const double gate2 = norm_sq(eta) / (wc * wc);
      const double xi2 = norm_sq(xi);
      if (xi2 <= gate2) {
        const double den = gate2 + d2;
        if (den == 0.0) {
          throw std::domain_error("limit model: coincident pair with delta = 0");
        }
        const double c = 1.0 / (kTwoPi * wc * den);
        const Vec2 pe = perp(eta);
        out[j].acceleration += (-pk.weight * c) * pe;
        out[k].acceleration += (pj.weight * c) * pe;
      } else {
        const double c = 1.0 / (kTwoPi * wc * (xi2 + d2));
        const Vec2 px = perp(xi);
        out[j].velocity += (pk.weight * c) * px;
        out[k].velocity += (-pj.weight * c) * px;
      }
    }
  }
  return out;
}

Ensemble step(const Ensemble& ens, const IntegratorConfig& cfg) {
  require_gyro(ens, "step");
  cfg.validate();
  return step_with(ens, cfg, cfg.dt);
}

TrajectoryRecord integrate(Ensemble ens, const IntegratorConfig& cfg, double t_end,
                           double snapshot_every,
                           const std::function<void(const Ensemble&)>& observer) {
  require_gyro(ens, "integrate");
  cfg.validate();
  if (!std::isfinite(t_end) || t_end < ens.time) {
    throw std::invalid_argument("integrate: t_end must be >= ens.time");
  }
  if (!std::isfinite(snapshot_every) || snapshot_every <= 0.0) {
    throw std::invalid_argument("integrate: snapshot_every must be positive");
  }

  TrajectoryRecord rec;
  auto emit = [&](const Ensemble& e) {
    rec.snapshots.push_back(e);
    if (observer) observer(e);
  };
  emit(ens);

  const double t0 = ens.time;
  const double t_tol = 1e-12 * std::max(1.0, std::abs(t_end));
  if (t_end - t0 <= t_tol) return rec;

  for (long i = 1;; ++i) {
    double target = t0 + static_cast<double>(i) * snapshot_every;
    const bool last = target >= t_end - t_tol;
    if (last) target = t_end;
    while (target - ens.time > t_tol) {
      const double h = std::min(cfg.dt, target - ens.time);
      ens = step_with(ens, cfg, h);
    }
    ens.time = target;  // pin to the shared snapshot grid
    emit(ens);
    if (last) break;
  }
  return rec;
}

}  // namespace gyrosim
