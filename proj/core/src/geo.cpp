#include "seakeep/geo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace seakeep {

namespace {

std::array<double, 3> to_unit(const LatLon& p) {
  const double lat = deg2rad(p.lat_deg);
  const double lon = deg2rad(p.lon_deg);
  return {std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon), std::sin(lat)};
}

LatLon from_unit(const std::array<double, 3>& v) {
  LatLon p;
  p.lat_deg = rad2deg(std::asin(std::clamp(v[2], -1.0, 1.0)));
  p.lon_deg = rad2deg(std::atan2(v[1], v[0]));
  if (p.lon_deg >= 180.0) p.lon_deg -= 360.0;
  return p;
}

}  // namespace

GridCell GridCell::of(const LatLon& p) {
  double lat = std::clamp(p.lat_deg, -90.0, 90.0);
  double lon = p.lon_deg;
  while (lon < -180.0) lon += 360.0;
  while (lon >= 180.0) lon -= 360.0;
  GridCell c;
  c.lat_bin = std::min(359, static_cast<int>(std::floor((lat + 90.0) / 0.5)));
  c.lon_bin = std::min(719, static_cast<int>(std::floor((lon + 180.0) / 0.5)));
  return c;
}

LatLon GridCell::center() const {
  return {-90.0 + (lat_bin + 0.5) * 0.5, -180.0 + (lon_bin + 0.5) * 0.5};
}

double haversine_m(const LatLon& a, const LatLon& b) {
  const double p1 = deg2rad(a.lat_deg), p2 = deg2rad(b.lat_deg);
  const double dp = p2 - p1;
  const double dl = deg2rad(b.lon_deg - a.lon_deg);
  const double s = std::sin(dp / 2) * std::sin(dp / 2) +
                   std::cos(p1) * std::cos(p2) * std::sin(dl / 2) * std::sin(dl / 2);
  return 2.0 * kEarthRadiusM * std::asin(std::min(1.0, std::sqrt(s)));
}

double forward_azimuth_deg(const LatLon& a, const LatLon& b) {
  const double p1 = deg2rad(a.lat_deg), p2 = deg2rad(b.lat_deg);
  const double dl = deg2rad(b.lon_deg - a.lon_deg);
  const double y = std::sin(dl) * std::cos(p2);
  const double x = std::cos(p1) * std::sin(p2) - std::sin(p1) * std::cos(p2) * std::cos(dl);
  return wrap360(rad2deg(std::atan2(y, x)));
}

GreatCircleRoute great_circle_route(const LatLon& start, const LatLon& end) {
  GreatCircleRoute route;
  const auto u = to_unit(start);
  const auto v = to_unit(end);
  double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  dot = std::clamp(dot, -1.0, 1.0);
  const double angle = std::acos(dot);

  if (angle > kPi - 1e-9)
    throw std::invalid_argument("antipodal endpoints: great circle is ambiguous");

  const GridCell start_cell = GridCell::of(start);
  if (angle * kEarthRadiusM < 1.0) {  // sub-meter: a single cell, zero distance
    Waypoint w;
    w.cell = start_cell;
    w.center = start_cell.center();
    route.waypoints.push_back(w);
    route.arc_length_m = 0.0;
    return route;
  }

  route.arc_length_m = angle * kEarthRadiusM;
  const int n_steps = std::max(8, static_cast<int>(route.arc_length_m / 1000.0));
  const double sin_angle = std::sin(angle);

  GridCell prev_cell;
  bool have_prev = false;
  for (int i = 0; i <= n_steps; ++i) {
    const double f = static_cast<double>(i) / n_steps;
    // spherical linear interpolation along the great circle
    const double a = std::sin((1.0 - f) * angle) / sin_angle;
    const double b = std::sin(f * angle) / sin_angle;
    const std::array<double, 3> p = {a * u[0] + b * v[0], a * u[1] + b * v[1],
                                     a * u[2] + b * v[2]};
    const LatLon pos = from_unit(p);
    const GridCell cell = GridCell::of(pos);
    if (!have_prev || !(cell == prev_cell)) {
      Waypoint w;
      w.cell = cell;
      w.center = cell.center();
      w.course_deg = forward_azimuth_deg(pos, end);
      w.arc_m = f * route.arc_length_m;
      route.waypoints.push_back(w);
      prev_cell = cell;
      have_prev = true;
    }
  }

  for (std::size_t i = 1; i < route.waypoints.size(); ++i)
    route.snapped_length_m +=
        haversine_m(route.waypoints[i - 1].center, route.waypoints[i].center);
  // the last azimuth toward the destination degenerates as the points
  // coincide; keep the previous leg's course there
  if (route.waypoints.size() >= 2)
    route.waypoints.back().course_deg = route.waypoints[route.waypoints.size() - 2].course_deg;
  return route;
}

}  // namespace seakeep
