#ifndef GYROSIM_CSV_IO_HPP
#define GYROSIM_CSV_IO_HPP

#include <string>
#include <vector>

#include "gyrosim/diagnostics.hpp"
#include "gyrosim/ensemble.hpp"

namespace gyrosim {

// CSV emission with round-trip-exact doubles (17 significant digits), so a
// written snapshot reads back bit-identical and reruns diff clean.

// columns: id,x1,x2,v1,v2,w
void write_snapshot(const std::string& path, const Ensemble& ens);
std::vector<Particle> read_snapshot(const std::string& path);

struct DiagRow {
  double t = 0.0;
  MomentSet m;
  EnergyReport e;
};

DiagRow diag_row(const Ensemble& gyro_ens);  // diagnostics at one snapshot

// columns: t,mass,mpx,mpy,mvx,mvy,possq,velsq,e_elec,e_kin
void write_diag(const std::string& path, const std::vector<DiagRow>& rows);
std::vector<DiagRow> read_diag(const std::string& path);

std::string snapshot_filename(std::size_t index);  // snapshot_<index>.csv

}  // namespace gyrosim

#endif
