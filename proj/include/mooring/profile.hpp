#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "mooring/catenary.hpp"
#include "mooring/integrate.hpp"

namespace mooring {

// Line profiles are comma-separated text with the header
//   s,x,y,z,n_x,n_y,n_z
// one row per sample, SI units, shortest round-trip formatting of each double.

using ProfileRow = std::array<double, 7>;

std::string format_double(double v);

void write_profile(std::ostream& os, const std::vector<ProfileRow>& rows);

std::vector<ProfileRow> profile_rows(const Trajectory& traj);

/// `samples` >= 2 uniformly spaced abscissae on [0, L] of the closed form.
std::vector<ProfileRow> oracle_rows(const CatenaryParameters& params, const LineProperties& props,
                                    int samples);

}  // namespace mooring
