#include "gyrosim/run_config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gyrosim {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

class KeyValues {
 public:
  void insert(const std::string& section, const std::string& key,
              const std::string& value, int line) {
    const std::string full = section + "." + key;
    if (values_.count(full)) {
      throw std::invalid_argument("config: duplicate key '" + full + "' (line " +
                                  std::to_string(line) + ")");
    }
    values_[full] = value;
  }

  bool has(const std::string& full) const { return values_.count(full) != 0; }

  std::string take_string(const std::string& full, const std::string& fallback) {
    auto it = values_.find(full);
    if (it == values_.end()) return fallback;
    consumed_.insert({full, true});
    return it->second;
  }

  std::string take_required(const std::string& full) {
    auto it = values_.find(full);
    if (it == values_.end()) {
      throw std::invalid_argument("config: missing required key '" + full + "'");
    }
    consumed_.insert({full, true});
    return it->second;
  }

  double take_double(const std::string& full, double fallback) {
    if (!has(full)) return fallback;
    return parse_double(full, take_required(full));
  }

  long take_long(const std::string& full, long fallback) {
    if (!has(full)) return fallback;
    const std::string raw = take_required(full);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(raw, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("config: key '" + full + "' is not an integer");
    }
    if (used != raw.size()) {
      throw std::invalid_argument("config: key '" + full + "' is not an integer");
    }
    return v;
  }

  double parse_double(const std::string& full, const std::string& raw) const {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(raw, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("config: key '" + full + "' is not a number");
    }
    if (used != raw.size()) {
      throw std::invalid_argument("config: key '" + full + "' is not a number");
    }
    return v;
  }

  void reject_unconsumed() const {
    for (const auto& [full, value] : values_) {
      if (!consumed_.count(full)) {
        throw std::invalid_argument("config: unknown key '" + full + "'");
      }
    }
  }

 private:
  std::map<std::string, std::string> values_;
  std::map<std::string, bool> consumed_;
};

ICKind parse_kind(const std::string& raw) {
  if (raw == "gaussian") return ICKind::GaussianBump;
  if (raw == "cosine") return ICKind::CosineBump;
  if (raw == "two-stream") return ICKind::TwoStream;
  throw std::invalid_argument(
      "config: initial.kind must be gaussian, cosine, or two-stream");
}

Scheme parse_scheme(const std::string& raw) {
  if (raw == "rk4") return Scheme::RK4;
  if (raw == "midpoint") return Scheme::ImplicitMidpoint;
  throw std::invalid_argument("config: integrator.scheme must be rk4 or midpoint");
}

}  // namespace

void RunConfig::validate() const {
  params.validate();
  ic.validate();
  if (n_per_dim < 2) {
    throw std::invalid_argument("config: sampling.n_per_dim must be >= 2");
  }
  if (!(jitter >= 0.0) || jitter > 1.0) {
    throw std::invalid_argument("config: sampling.jitter must lie in [0, 1]");
  }
  integrator.validate();
  split.validate();
  if (!std::isfinite(t_end) || t_end <= 0.0) {
    throw std::invalid_argument("config: run.t_end must be positive");
  }
  if (!std::isfinite(snapshot_every) || snapshot_every <= 0.0) {
    throw std::invalid_argument("config: run.snapshot_every must be positive");
  }
  if (output_dir.empty()) {
    throw std::invalid_argument("config: run.output_dir must not be empty");
  }
}

RunConfig parse_run_config(std::istream& in) {
  KeyValues kv;
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw std::invalid_argument("config: malformed section header (line " +
                                    std::to_string(lineno) + ")");
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section != "physics" && section != "initial" && section != "sampling" &&
          section != "integrator" && section != "split" && section != "run") {
        throw std::invalid_argument("config: unknown section '" + section + "'");
      }
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos || section.empty()) {
      throw std::invalid_argument("config: expected 'key = value' (line " +
                                  std::to_string(lineno) + ")");
    }
    kv.insert(section, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), lineno);
  }

  RunConfig cfg;
  cfg.params.omega_c = kv.parse_double("physics.omega_c", kv.take_required("physics.omega_c"));
  cfg.params.epsilon = kv.take_double("physics.epsilon", cfg.params.epsilon);
  cfg.params.delta = kv.take_double("physics.delta", cfg.params.delta);

  cfg.ic.kind = parse_kind(kv.take_required("initial.kind"));
  cfg.ic.center_x = {kv.take_double("initial.center_x1", cfg.ic.center_x.x),
                     kv.take_double("initial.center_x2", cfg.ic.center_x.y)};
  cfg.ic.center_v = {kv.take_double("initial.center_v1", cfg.ic.center_v.x),
                     kv.take_double("initial.center_v2", cfg.ic.center_v.y)};
  cfg.ic.radius_x = kv.take_double("initial.radius_x", cfg.ic.radius_x);
  cfg.ic.radius_v = kv.take_double("initial.radius_v", cfg.ic.radius_v);
  cfg.ic.total_mass = kv.take_double("initial.total_mass", cfg.ic.total_mass);

  cfg.n_per_dim = static_cast<int>(kv.take_long("sampling.n_per_dim", cfg.n_per_dim));
  const long seed = kv.take_long("sampling.seed", 0);
  if (seed < 0) {
    throw std::invalid_argument("config: sampling.seed must be nonnegative");
  }
  cfg.seed = static_cast<std::uint64_t>(seed);
  cfg.jitter = kv.take_double("sampling.jitter", cfg.jitter);

  if (kv.has("integrator.scheme")) {
    cfg.integrator.scheme = parse_scheme(kv.take_required("integrator.scheme"));
  }
  // fallbacks read the struct defaults so the two never drift apart
  cfg.integrator.dt = kv.take_double("integrator.dt", cfg.integrator.dt);
  cfg.integrator.midpoint_tol =
      kv.take_double("integrator.midpoint_tol", cfg.integrator.midpoint_tol);
  cfg.integrator.midpoint_max_iters = static_cast<int>(kv.take_long(
      "integrator.midpoint_max_iters", cfg.integrator.midpoint_max_iters));

  cfg.split.dt = kv.take_double("split.dt", cfg.split.dt);
  cfg.split.substeps_per_cyclotron_period = static_cast<int>(
      kv.take_long("split.substeps_per_cyclotron_period",
                   cfg.split.substeps_per_cyclotron_period));

  cfg.t_end = kv.parse_double("run.t_end", kv.take_required("run.t_end"));
  cfg.snapshot_every =
      kv.parse_double("run.snapshot_every", kv.take_required("run.snapshot_every"));
  cfg.output_dir = kv.take_string("run.output_dir", cfg.output_dir);

  kv.reject_unconsumed();
  cfg.validate();
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("config: cannot open '" + path + "'");
  }
  return parse_run_config(in);
}

}  // namespace gyrosim
