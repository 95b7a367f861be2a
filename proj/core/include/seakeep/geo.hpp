#pragma once

#include <cstdint>
#include <vector>

#include "seakeep/constants.hpp"

namespace seakeep {

struct LatLon {
  double lat_deg = 0.0;
  double lon_deg = 0.0;
};

/// Half-degree grid cell. Bins cover [-90, 90] x [-180, 180); centers sit at
/// odd multiples of 0.25 degrees.
struct GridCell {
  int lat_bin = 0;  // [0, 360)
  int lon_bin = 0;  // [0, 720)

  static GridCell of(const LatLon& p);
  LatLon center() const;
  bool operator==(const GridCell&) const = default;
  auto operator<=>(const GridCell&) const = default;
};

/// Great-circle distance on the spherical earth model.
double haversine_m(const LatLon& a, const LatLon& b);

/// Initial bearing from a toward b, degrees clockwise from north, [0, 360).
double forward_azimuth_deg(const LatLon& a, const LatLon& b);

struct Waypoint {
  GridCell cell;
  LatLon center;          // grid-snapped position
  double course_deg = 0;  // great-circle azimuth while crossing this cell
  double arc_m = 0;       // along-route arc distance at cell entry
};

struct GreatCircleRoute {
  std::vector<Waypoint> waypoints;   // every half-degree cell crossed, in order
  double arc_length_m = 0.0;         // exact great-circle length
  double snapped_length_m = 0.0;     // center-to-center polyline length (>= arc)
};

/// Cells crossed by the great circle from start to end, found by dense
/// parametric sampling (~1 km steps) and consecutive deduplication.
/// Throws std::invalid_argument for (near-)antipodal endpoints.
GreatCircleRoute great_circle_route(const LatLon& start, const LatLon& end);

}  // namespace seakeep
