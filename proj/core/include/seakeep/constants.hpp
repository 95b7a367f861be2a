#pragma once

namespace seakeep {

inline constexpr double kGravity = 9.81;        // m/s^2
inline constexpr double kRhoSeawater = 1025.0;  // kg/m^3
inline constexpr double kEarthRadiusM = 6371.0e3;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kKnotsToMps = 0.514444;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

/// Normalize an angle in degrees to [0, 360).
inline double wrap360(double deg) {
  double w = deg - 360.0 * static_cast<long long>(deg / 360.0);
  if (w < 0) w += 360.0;
  return w == 360.0 ? 0.0 : w;
}

/// Signed difference a-b wrapped to (-180, 180].
inline double wrap180(double deg) {
  double w = wrap360(deg);
  return w > 180.0 ? w - 360.0 : w;
}

}  // namespace seakeep
