#pragma once

#include <vector>

#include "seakeep/hull.hpp"

namespace seakeep {

/// Pre-computed immersed sectional properties vs waterline height, sampled on
/// a uniform z grid per station with linear interpolation between samples.
/// Immutable after build; lookups are pure.
class BonjeanTable {
 public:
  struct Section {
    double area = 0.0;        // immersed area [m^2]
    double centroid_z = 0.0;  // vertical centroid above baseline [m]
    double halfbeam = 0.0;    // local waterline half-breadth [m]
    double inertia_t = 0.0;   // transverse second moment of the local
                              // waterline strip, (2/3) y^3 [m^4/m]
  };

  static BonjeanTable build(const HullOffsets& hull, int n_z);

  /// Clamped lookup: below keel -> dry (area 0, centroid at keel); above the
  /// table top -> wall-sided extension of the stored full section.
  Section section(int station, double waterline_z) const;

  int station_count() const { return static_cast<int>(stations_.size()); }
  double station_x(int s) const { return stations_[checked(s)].x; }
  /// Trapezoidal integration weight of a station [m].
  double station_weight(int s) const { return stations_[checked(s)].weight; }
  double z_top() const { return z_top_; }

  /// Level-waterline integrals used for restoring-coefficient checks.
  double waterplane_area(double draft) const;
  double waterplane_inertia_t(double draft) const;

 private:
  struct StationTable {
    double x = 0.0;
    double weight = 0.0;
    std::vector<double> halfbeam;
    std::vector<double> area;
    std::vector<double> moment_z;  // integral of z dA
  };

  int checked(int s) const;

  std::vector<StationTable> stations_;
  double dz_ = 0.0;
  double z_top_ = 0.0;
};

}  // namespace seakeep
