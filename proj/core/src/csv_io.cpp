#include "gyrosim/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gyrosim {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("csv: cannot write '" + path + "'");
  }
  return out;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

double to_double(const std::string& s, const std::string& path) {
  try {
    return std::stod(s);
  } catch (const std::exception&) {
    throw std::runtime_error("csv: malformed number in '" + path + "'");
  }
}

}  // namespace

std::string snapshot_filename(std::size_t index) {
  return "snapshot_" + std::to_string(index) + ".csv";
}

void write_snapshot(const std::string& path, const Ensemble& ens) {
  std::ofstream out = open_out(path);
  out << "id,x1,x2,v1,v2,w\n";
  for (std::size_t j = 0; j < ens.size(); ++j) {
    const Particle& p = ens.particles[j];
    out << j << ',' << fmt(p.pos.x) << ',' << fmt(p.pos.y) << ',' << fmt(p.vel.x)
        << ',' << fmt(p.vel.y) << ',' << fmt(p.weight) << '\n';
  }
}

std::vector<Particle> read_snapshot(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("csv: cannot open '" + path + "'");
  }
  std::string line;
  if (!std::getline(in, line) || line != "id,x1,x2,v1,v2,w") {
    throw std::runtime_error("csv: bad snapshot header in '" + path + "'");
  }
  std::vector<Particle> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_line(line);
    if (f.size() != 6) {
      throw std::runtime_error("csv: bad snapshot row in '" + path + "'");
    }
    Particle p;
    p.pos = {to_double(f[1], path), to_double(f[2], path)};
    p.vel = {to_double(f[3], path), to_double(f[4], path)};
    p.weight = to_double(f[5], path);
    out.push_back(p);
  }
  return out;
}

DiagRow diag_row(const Ensemble& gyro_ens) {
  DiagRow row;
  row.t = gyro_ens.time;
  row.m = moments(gyro_ens);
  row.e = energies(gyro_ens);
  return row;
}

void write_diag(const std::string& path, const std::vector<DiagRow>& rows) {
  std::ofstream out = open_out(path);
  out << "t,mass,mpx,mpy,mvx,mvy,possq,velsq,e_elec,e_kin\n";
  for (const DiagRow& r : rows) {
    out << fmt(r.t) << ',' << fmt(r.m.mass) << ',' << fmt(r.m.mean_pos.x) << ','
        << fmt(r.m.mean_pos.y) << ',' << fmt(r.m.mean_vel.x) << ','
        << fmt(r.m.mean_vel.y) << ',' << fmt(r.m.pos_sq) << ',' << fmt(r.m.vel_sq)
        << ',' << fmt(r.e.electric) << ',' << fmt(r.e.kinetic) << '\n';
  }
}

std::vector<DiagRow> read_diag(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("csv: cannot open '" + path + "'");
  }
  std::string line;
  if (!std::getline(in, line) ||
      line != "t,mass,mpx,mpy,mvx,mvy,possq,velsq,e_elec,e_kin") {
    throw std::runtime_error("csv: bad diagnostics header in '" + path + "'");
  }
  std::vector<DiagRow> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_line(line);
    if (f.size() != 10) {
      throw std::runtime_error("csv: bad diagnostics row in '" + path + "'");
    }
    DiagRow r;
    r.t = to_double(f[0], path);
    r.m.mass = to_double(f[1], path);
    r.m.mean_pos = {to_double(f[2], path), to_double(f[3], path)};
    r.m.mean_vel = {to_double(f[4], path), to_double(f[5], path)};
    r.m.pos_sq = to_double(f[6], path);
    r.m.vel_sq = to_double(f[7], path);
    r.e.electric = to_double(f[8], path);
    r.e.kinetic = to_double(f[9], path);
    out.push_back(r);
  }
  return out;
}

}  // namespace gyrosim
