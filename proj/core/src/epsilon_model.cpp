#include "gyrosim/epsilon_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gyrosim/gyro_transform.hpp"
#include "gyrosim/kernel.hpp"

namespace gyrosim {

namespace {

void require_lab(const Ensemble& ens, const char* who) {
  if (ens.frame != Frame::LabFrame) {
    throw std::runtime_error(std::string(who) + ": ensemble is not in the lab frame");
  }
}

// E_j = -sum_{k != j} w_k grad e_delta(x_j - x_k), one symmetric sweep
std::vector<Vec2> electric_field_all(const Ensemble& ens) {
  const std::size_t n = ens.size();
  std::vector<Vec2> field(n, Vec2{0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) {
    const Particle& pj = ens.particles[j];
    for (std::size_t k = j + 1; k < n; ++k) {
      const Particle& pk = ens.particles[k];
      const Vec2 g = grad_fundamental(pj.pos - pk.pos, ens.params.delta);
      field[j] -= pk.weight * g;
      field[k] += pj.weight * g;
    }
  }
  return field;
}

}  // namespace

void SplitStepConfig::validate() const {
  if (!std::isfinite(dt) || dt <= 0.0) {
    throw std::invalid_argument("SplitStepConfig: dt must be finite and positive");
  }
  if (substeps_per_cyclotron_period < 20) {
    throw std::invalid_argument(
        "SplitStepConfig: substeps_per_cyclotron_period must be >= 20");
  }
}

double SplitStepConfig::effective_dt(const PhysicalParams& params) const {
  const double gyration = std::abs(params.scaled_cyclotron_period());
  return std::min(dt, gyration / substeps_per_cyclotron_period);
}

Vec2 electric_field(const Ensemble& ens, Vec2 x) {
  require_lab(ens, "electric_field");
  Vec2 field{0.0, 0.0};
  for (const Particle& p : ens.particles) {
    if (p.pos == x) continue;
    field -= p.weight * grad_fundamental(x - p.pos, ens.params.delta);
  }
  return field;
}

Ensemble cyclotron_substep(const Ensemble& ens, double dt) {
  require_lab(ens, "cyclotron_substep");
  const double wc = ens.params.omega_c;
  const double angle = -wc * dt / ens.params.epsilon;
  Ensemble out = ens;
  for (Particle& p : out.particles) {
    const Vec2 center = p.pos + perp(p.vel) / wc;  // invariant of the rotation
    p.vel = rotate(angle, p.vel);
    p.pos = center - perp(p.vel) / wc;
  }
  out.time += dt;
  return out;
}

Ensemble kick_substep(const Ensemble& ens, double dt) {
  require_lab(ens, "kick_substep");
  const std::vector<Vec2> field = electric_field_all(ens);
  Ensemble out = ens;
  for (std::size_t j = 0; j < out.size(); ++j) {
    out.particles[j].vel += dt * field[j];
  }
  return out;
}

Ensemble step_full(const Ensemble& ens, const SplitStepConfig& cfg) {
  require_lab(ens, "step_full");
  cfg.validate();
  Ensemble out = cyclotron_substep(ens, 0.5 * cfg.dt);
  if (!cfg.disable_field) {
    out = kick_substep(out, cfg.dt);
  }
  return cyclotron_substep(out, 0.5 * cfg.dt);
}

TrajectoryRecord integrate_full(Ensemble ens, const SplitStepConfig& cfg, double t_end,
                                double snapshot_every,
                                const std::function<void(const Ensemble&)>& observer) {
  require_lab(ens, "integrate_full");
  cfg.validate();
  if (!std::isfinite(t_end) || t_end < ens.time) {
    throw std::invalid_argument("integrate_full: t_end must be >= ens.time");
  }
  if (!std::isfinite(snapshot_every) || snapshot_every <= 0.0) {
    throw std::invalid_argument("integrate_full: snapshot_every must be positive");
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

  const double dt_cap = cfg.effective_dt(ens.params);
  SplitStepConfig stepcfg = cfg;
  for (long i = 1;; ++i) {
    double target = t0 + static_cast<double>(i) * snapshot_every;
    const bool last = target >= t_end - t_tol;
    if (last) target = t_end;
    while (target - ens.time > t_tol) {
      stepcfg.dt = std::min(dt_cap, target - ens.time);
      ens = step_full(ens, stepcfg);
    }
    ens.time = target;
    emit(ens);
    if (last) break;
  }
  return rec;
}

TrajectoryRecord filtered_trajectory(const TrajectoryRecord& rec) {
  TrajectoryRecord out;
  out.snapshots.reserve(rec.snapshots.size());
  for (const Ensemble& snap : rec.snapshots) {
    out.snapshots.push_back(to_gyro(snap));
  }
  return out;
}

}  // namespace gyrosim
