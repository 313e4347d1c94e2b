#include "mooring/profile.hpp"

#include <charconv>
#include <system_error>

#include "mooring/errors.hpp"

namespace mooring {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_profile(std::ostream& os, const std::vector<ProfileRow>& rows) {
  os << "s,x,y,z,n_x,n_y,n_z\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << format_double(row[i]);
    }
    os << '\n';
  }
}

std::vector<ProfileRow> profile_rows(const Trajectory& traj) {
  std::vector<ProfileRow> rows;
  rows.reserve(traj.size());
  for (const auto& smp : traj.samples) {
    const auto& r = smp.state.position;
    const auto& n = smp.state.tension;
    rows.push_back({smp.s, r.x(), r.y(), r.z(), n.x(), n.y(), n.z()});
  }
  return rows;
}

std::vector<ProfileRow> oracle_rows(const CatenaryParameters& params, const LineProperties& props,
                                    int samples) {
  if (samples < 2) throw SolverError(ErrorKind::InvalidInput, "need at least 2 samples");
  std::vector<ProfileRow> rows;
  rows.reserve(static_cast<std::size_t>(samples));
  const double length = props.length_rest;
  for (int i = 0; i < samples; ++i) {
    const double s = i + 1 == samples ? length : length * i / (samples - 1);
    const GlobalFields g = to_global(s, params, props);
    rows.push_back({s, g.x, 0.0, g.z, g.n_x, 0.0, g.n_z});
  }
  return rows;
}

}  // namespace mooring
