#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "seakeep/constants.hpp"

namespace seakeep {

/// Principal particulars. Radii of gyration are not part of the published
/// set; the kxx/kyy fractions are standard naval-architecture approximations
/// and live here so they are configuration, not hard-coded.
struct HullParticulars {
  double lwl_m = 0.0;
  double beam_m = 0.0;
  double draft_m = 0.0;
  double disp_t = 0.0;  // target displacement [t]; 0 = derive from geometry
  double kg_m = 0.0;    // VCG above baseline
  double lcg_m = 0.0;   // LCG from FP
  double kxx_frac = 0.37;  // kxx = kxx_frac * B
  double kyy_frac = 0.25;  // kyy = kyy_frac * Lwl

  double mass_kg() const { return disp_t * 1000.0; }
  double ixx() const { return mass_kg() * (kxx_frac * beam_m) * (kxx_frac * beam_m); }
  double iyy() const { return mass_kg() * (kyy_frac * lwl_m) * (kyy_frac * lwl_m); }
};

enum class HullKind { Box, FrigateParametric };

/// Offsets for one transverse station: monotone table of half-breadth vs
/// height above baseline.
struct Station {
  double x = 0.0;  // from FP, aft positive [m]
  std::vector<double> z;         // strictly increasing, z[0] = 0 (keel)
  std::vector<double> halfbeam;  // >= 0, same length as z

  double halfbeam_at(double zq) const;  // clamped linear interpolation
};

struct HullOffsets {
  std::vector<Station> stations;  // x strictly increasing
  HullParticulars particulars;
  double depth_m = 0.0;  // top of the offsets table
  std::string id;        // short tag for record metadata

  /// Immersed volume below a level waterline with trim about LCG [m^3].
  double displaced_volume(double draft_lcg, double trim_rad = 0.0) const;
  /// Waterplane area at a level waterline [m^2].
  double waterplane_area(double draft) const;
  void validate() const;
};

/// Build a hull honoring the requested particulars. The box is exact
/// (displacement at design draft = rho*L*B*T); the parametric frigate solves
/// its section-fullness exponent so the discretized displacement matches
/// disp_t. Throws std::invalid_argument for infeasible particulars.
HullOffsets generate_hull(HullKind kind, const HullParticulars& p, int n_stations = 21,
                          int n_z = 101);

/// Offsets file: CSV rows `station_x,z,half_breadth`.
void write_offsets_csv(const std::filesystem::path& file, const HullOffsets& h);
HullOffsets load_offsets_csv(const std::filesystem::path& file, const HullParticulars& p);

}  // namespace seakeep
