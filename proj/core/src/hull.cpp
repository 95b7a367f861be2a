#include "seakeep/hull.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "seakeep/csv.hpp"
#include "seakeep/errors.hpp"

namespace seakeep {

double Station::halfbeam_at(double zq) const {
  if (z.empty()) return 0.0;
  if (zq <= z.front()) return halfbeam.front();
  if (zq >= z.back()) return halfbeam.back();
  auto it = std::upper_bound(z.begin(), z.end(), zq);
  const std::size_t i = static_cast<std::size_t>(it - z.begin());
  const double f = (zq - z[i - 1]) / (z[i] - z[i - 1]);
  return halfbeam[i - 1] + f * (halfbeam[i] - halfbeam[i - 1]);
}

namespace {

double station_area(const Station& st, double waterline) {
  // trapezoidal area of the immersed part, 2*integral(halfbeam dz)
  double area = 0.0;
  for (std::size_t i = 1; i < st.z.size(); ++i) {
    const double zlo = st.z[i - 1];
    const double zhi = std::min(st.z[i], waterline);
    if (zhi <= zlo) break;
    const double ylo = st.halfbeam[i - 1];
    const double yhi = st.halfbeam_at(zhi);
    area += (ylo + yhi) * (zhi - zlo);  // 2 * (ylo+yhi)/2 * dz
  }
  if (waterline > st.z.back()) area += 2.0 * st.halfbeam.back() * (waterline - st.z.back());
  return area;
}

}  // namespace

double HullOffsets::displaced_volume(double draft_lcg, double trim_rad) const {
  double vol = 0.0;
  const double lcg = particulars.lcg_m;
  for (std::size_t s = 0; s < stations.size(); ++s) {
    const double lever = lcg - stations[s].x;  // +forward of LCG
    const double wl = draft_lcg + lever * std::tan(trim_rad);
    const double a = wl > 0.0 ? station_area(stations[s], wl) : 0.0;
    double w;
    if (s == 0)
      w = (stations[1].x - stations[0].x) / 2.0;
    else if (s + 1 == stations.size())
      w = (stations[s].x - stations[s - 1].x) / 2.0;
    else
      w = (stations[s + 1].x - stations[s - 1].x) / 2.0;
    vol += a * w;
  }
  return vol;
}

double HullOffsets::waterplane_area(double draft) const {
  double area = 0.0;
  for (std::size_t s = 0; s < stations.size(); ++s) {
    const double y = draft > 0.0 ? stations[s].halfbeam_at(draft) : 0.0;
    double w;
    if (s == 0)
      w = (stations[1].x - stations[0].x) / 2.0;
    else if (s + 1 == stations.size())
      w = (stations[s].x - stations[s - 1].x) / 2.0;
    else
      w = (stations[s + 1].x - stations[s - 1].x) / 2.0;
    area += 2.0 * y * w;
  }
  return area;
}

void HullOffsets::validate() const {
  if (stations.size() < 2) throw std::invalid_argument("hull needs at least 2 stations");
  for (std::size_t s = 1; s < stations.size(); ++s)
    if (!(stations[s].x > stations[s - 1].x))
      throw std::invalid_argument("station x must be strictly increasing");
  for (const auto& st : stations) {
    if (st.z.size() != st.halfbeam.size() || st.z.size() < 2)
      throw std::invalid_argument("station table malformed");
    for (std::size_t i = 1; i < st.z.size(); ++i)
      if (!(st.z[i] > st.z[i - 1])) throw std::invalid_argument("station z must be increasing");
    for (double y : st.halfbeam)
      if (y < 0.0 || !std::isfinite(y)) throw std::invalid_argument("half-breadth must be >= 0");
  }
}

namespace {

HullOffsets make_box(const HullParticulars& pin, int n_stations, int n_z) {
  HullParticulars p = pin;
  const double max_disp_t = kRhoSeawater * p.lwl_m * p.beam_m * p.draft_m / 1000.0;
  if (p.disp_t <= 0.0) p.disp_t = max_disp_t;
  if (p.disp_t > max_disp_t * (1.0 + 1e-9))
    throw std::invalid_argument("requested displacement exceeds rho*L*B*T");

  HullOffsets h;
  h.particulars = p;
  h.depth_m = 2.0 * p.draft_m;
  h.id = "box";
  h.stations.resize(static_cast<std::size_t>(n_stations));
  for (int s = 0; s < n_stations; ++s) {
    Station st;
    st.x = p.lwl_m * s / (n_stations - 1);
    st.z.resize(static_cast<std::size_t>(n_z));
    st.halfbeam.resize(static_cast<std::size_t>(n_z));
    for (int i = 0; i < n_z; ++i) {
      st.z[static_cast<std::size_t>(i)] = h.depth_m * i / (n_z - 1);
      st.halfbeam[static_cast<std::size_t>(i)] = p.beam_m / 2.0;
    }
    h.stations[static_cast<std::size_t>(s)] = std::move(st);
  }
  return h;
}

/// Parametric frigate-like form: waterline halfbeam Y(xi) = B/2 * sin(pi xi)^q,
/// sections y(z) = Y * (z/T)^m(xi) below the design waterline, wall-sided
/// above. The midship exponent is solved by bisection so the discretized
/// displacement hits the target.
HullOffsets make_frigate(const HullParticulars& pin, int n_stations, int n_z) {
  HullParticulars p = pin;
  if (p.disp_t <= 0.0) throw std::invalid_argument("frigate-parametric requires disp_t");
  const double target_vol = p.disp_t * 1000.0 / kRhoSeawater;

  const double q_wl = 0.65;      // waterplane fullness
  const double end_shape = 1.5;  // ends get (1 + end_shape) times the midship exponent

  auto build = [&](double m_mid) {
    HullOffsets h;
    h.particulars = p;
    h.depth_m = 1.9 * p.draft_m;
    h.id = "frigate";
    h.stations.resize(static_cast<std::size_t>(n_stations));
    for (int s = 0; s < n_stations; ++s) {
      const double xi = static_cast<double>(s) / (n_stations - 1);
      const double y_wl = 0.5 * p.beam_m * std::pow(std::sin(kPi * xi), q_wl);
      const double m = m_mid * (1.0 + end_shape * (2.0 * xi - 1.0) * (2.0 * xi - 1.0));
      Station st;
      st.x = p.lwl_m * xi;
      st.z.resize(static_cast<std::size_t>(n_z));
      st.halfbeam.resize(static_cast<std::size_t>(n_z));
      for (int i = 0; i < n_z; ++i) {
        const double z = h.depth_m * i / (n_z - 1);
        st.z[static_cast<std::size_t>(i)] = z;
        const double zeta = std::min(z / p.draft_m, 1.0);
        st.halfbeam[static_cast<std::size_t>(i)] = y_wl * std::pow(zeta, m);
      }
      h.stations[static_cast<std::size_t>(s)] = std::move(st);
    }
    return h;
  };

  double lo = 0.02, hi = 12.0;
  // volume decreases monotonically with the exponent
  if (build(lo).displaced_volume(p.draft_m) < target_vol)
    throw std::invalid_argument("requested displacement infeasible for the parametric form");
  if (build(hi).displaced_volume(p.draft_m) > target_vol)
    throw std::invalid_argument("requested displacement too small for the parametric form");
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (build(mid).displaced_volume(p.draft_m) > target_vol)
      lo = mid;
    else
      hi = mid;
  }
  return build(0.5 * (lo + hi));
}

}  // namespace

HullOffsets generate_hull(HullKind kind, const HullParticulars& p, int n_stations, int n_z) {
  if (!(p.lwl_m > 0.0) || !(p.beam_m > 0.0) || !(p.draft_m > 0.0))
    throw std::invalid_argument("hull dimensions must be positive");
  if (n_stations < 2 || n_z < 2) throw std::invalid_argument("need >= 2 stations and z samples");
  HullOffsets h = kind == HullKind::Box ? make_box(p, n_stations, n_z)
                                        : make_frigate(p, n_stations, n_z);
  h.validate();
  return h;
}

void write_offsets_csv(const std::filesystem::path& file, const HullOffsets& h) {
  std::ostringstream out;
  out << "station_x,z,half_breadth\n";
  for (const auto& st : h.stations)
    for (std::size_t i = 0; i < st.z.size(); ++i)
      out << fmt_g9(st.x) << ',' << fmt_g9(st.z[i]) << ',' << fmt_g9(st.halfbeam[i]) << '\n';
  write_file(file, out.str());
}

HullOffsets load_offsets_csv(const std::filesystem::path& file, const HullParticulars& p) {
  const CsvTable t = read_csv(file);
  const std::vector<std::string> want = {"station_x", "z", "half_breadth"};
  if (t.header != want) throw FormatError("offsets file must have header station_x,z,half_breadth");
  std::map<double, Station> by_x;
  int line = 1;
  for (const auto& row : t.rows) {
    ++line;
    if (row.size() != 3) throw FormatError("line " + std::to_string(line) + ": expected 3 fields");
    const double x = parse_double_field(row[0], line, "station_x");
    const double z = parse_double_field(row[1], line, "z");
    const double y = parse_double_field(row[2], line, "half_breadth");
    auto& st = by_x[x];
    st.x = x;
    st.z.push_back(z);
    st.halfbeam.push_back(y);
  }
  HullOffsets h;
  h.particulars = p;
  h.id = "imported";
  for (auto& [x, st] : by_x) {
    h.depth_m = std::max(h.depth_m, st.z.empty() ? 0.0 : st.z.back());
    h.stations.push_back(std::move(st));
  }
  h.validate();
  return h;
}

}  // namespace seakeep
