#include "seakeep/bonjean.hpp"

#include <cmath>
#include <stdexcept>

namespace seakeep {

BonjeanTable BonjeanTable::build(const HullOffsets& hull, int n_z) {
  if (n_z < 2) throw std::invalid_argument("build_bonjean: n_z must be >= 2");
  hull.validate();

  BonjeanTable t;
  t.z_top_ = hull.depth_m;
  t.dz_ = hull.depth_m / (n_z - 1);
  t.stations_.resize(hull.stations.size());

  for (std::size_t s = 0; s < hull.stations.size(); ++s) {
    const Station& st = hull.stations[s];
    StationTable& out = t.stations_[s];
    out.x = st.x;
    out.halfbeam.resize(static_cast<std::size_t>(n_z));
    out.area.resize(static_cast<std::size_t>(n_z));
    out.moment_z.resize(static_cast<std::size_t>(n_z));
    double area = 0.0, mz = 0.0;
    double y_prev = st.halfbeam_at(0.0);
    out.halfbeam[0] = y_prev;
    out.area[0] = 0.0;
    out.moment_z[0] = 0.0;
    for (int i = 1; i < n_z; ++i) {
      const double z0 = (i - 1) * t.dz_;
      const double z1 = i * t.dz_;
      const double y1 = st.halfbeam_at(z1);
      // trapezoidal slab: width 2y, first moment at slab mid-height
      const double da = (y_prev + y1) * (z1 - z0);
      area += da;
      mz += da * 0.5 * (z0 + z1);
      out.halfbeam[static_cast<std::size_t>(i)] = y1;
      out.area[static_cast<std::size_t>(i)] = area;
      out.moment_z[static_cast<std::size_t>(i)] = mz;
      y_prev = y1;
    }
  }

  for (std::size_t s = 0; s < t.stations_.size(); ++s) {
    double w;
    if (s == 0)
      w = (hull.stations[1].x - hull.stations[0].x) / 2.0;
    else if (s + 1 == t.stations_.size())
      w = (hull.stations[s].x - hull.stations[s - 1].x) / 2.0;
    else
      w = (hull.stations[s + 1].x - hull.stations[s - 1].x) / 2.0;
    t.stations_[s].weight = w;
  }
  return t;
}

int BonjeanTable::checked(int s) const {
  if (s < 0 || s >= static_cast<int>(stations_.size()))
    throw std::out_of_range("unknown station index " + std::to_string(s));
  return s;
}

BonjeanTable::Section BonjeanTable::section(int station, double waterline_z) const {
  const StationTable& st = stations_[static_cast<std::size_t>(checked(station))];
  Section sec;
  if (waterline_z <= 0.0) return sec;  // dry: centroid pinned at the keel

  const std::size_t last = st.area.size() - 1;
  if (waterline_z >= z_top_) {
    // wall-sided above the table: area keeps growing with the top half-breadth
    const double extra = waterline_z - z_top_;
    const double y_top = st.halfbeam[last];
    sec.area = st.area[last] + 2.0 * y_top * extra;
    const double mz = st.moment_z[last] + 2.0 * y_top * extra * (z_top_ + 0.5 * extra);
    sec.centroid_z = sec.area > 0.0 ? mz / sec.area : 0.0;
    sec.halfbeam = y_top;
    sec.inertia_t = (2.0 / 3.0) * y_top * y_top * y_top;
    return sec;
  }

  const double pos = waterline_z / dz_;
  std::size_t i = static_cast<std::size_t>(pos);
  if (i >= last) i = last - 1;
  const double f = pos - static_cast<double>(i);
  sec.area = st.area[i] + f * (st.area[i + 1] - st.area[i]);
  const double mz = st.moment_z[i] + f * (st.moment_z[i + 1] - st.moment_z[i]);
  sec.centroid_z = sec.area > 0.0 ? mz / sec.area : 0.0;
  sec.halfbeam = st.halfbeam[i] + f * (st.halfbeam[i + 1] - st.halfbeam[i]);
  sec.inertia_t = (2.0 / 3.0) * sec.halfbeam * sec.halfbeam * sec.halfbeam;
  return sec;
}

double BonjeanTable::waterplane_area(double draft) const {
  double a = 0.0;
  for (int s = 0; s < station_count(); ++s)
    a += 2.0 * section(s, draft).halfbeam * station_weight(s);
  return a;
}

double BonjeanTable::waterplane_inertia_t(double draft) const {
  double it = 0.0;
  for (int s = 0; s < station_count(); ++s)
    it += section(s, draft).inertia_t * station_weight(s);
  return it;
}

}  // namespace seakeep
