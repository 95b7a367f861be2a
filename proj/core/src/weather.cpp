#include "seakeep/weather.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "seakeep/csv.hpp"
#include "seakeep/errors.hpp"

namespace seakeep {

namespace {

int bin_half(double v) { return static_cast<int>(std::floor(v / 0.5)); }
int bin_dir30(double deg) { return static_cast<int>(std::floor(wrap360(deg) / 30.0)) % 12; }

}  // namespace

SeaConditionKey SeaConditionKey::of(const BimodalSeaState& sea) {
  SeaConditionKey k;
  k.hs1 = bin_half(sea.primary.hs);
  k.tp1 = bin_half(sea.primary.tp);
  k.hs2 = bin_half(sea.secondary.hs);
  k.tp2 = bin_half(sea.secondary.tp);
  k.ddir = std::isnan(sea.secondary.dir_deg)
               ? 0
               : bin_dir30(sea.secondary.dir_deg - sea.primary.dir_deg);
  return k;
}

BimodalSeaState SeaConditionKey::representative() const {
  BimodalSeaState sea;
  sea.primary.hs = (hs1 + 0.5) * 0.5;
  sea.primary.tp = (tp1 + 0.5) * 0.5;
  sea.primary.dir_deg = 0.0;
  sea.secondary.hs = (hs2 + 0.5) * 0.5;
  sea.secondary.tp = (tp2 + 0.5) * 0.5;
  sea.secondary.dir_deg = wrap360(ddir * 30.0 + 15.0);
  return sea;
}

WeatherHistogram WeatherHistogram::load_csv(const std::filesystem::path& file) {
  const CsvTable t = read_csv(file);
  WeatherHistogram h;
  if (t.header.empty()) return h;  // empty file -> empty histogram

  const std::vector<std::string> want = {"lat_bin", "lon_bin", "hs1", "tp1", "dir1",
                                         "hs2",     "tp2",     "dir2", "count"};
  if (t.header != want) {
    std::string got;
    for (const auto& c : t.header) got += c + ",";
    throw FormatError("weather histogram header mismatch, got: " + got);
  }

  int line = 1;
  for (const auto& row : t.rows) {
    ++line;
    if (row.size() != want.size())
      throw FormatError("line " + std::to_string(line) + ": expected 9 fields");
    GridCell cell;
    cell.lat_bin = static_cast<int>(parse_double_field(row[0], line, "lat_bin"));
    cell.lon_bin = static_cast<int>(parse_double_field(row[1], line, "lon_bin"));
    if (cell.lat_bin < 0 || cell.lat_bin >= 360 || cell.lon_bin < 0 || cell.lon_bin >= 720)
      throw FormatError("line " + std::to_string(line) + ": cell bin out of range");
    WeatherEntry e;
    e.sea.primary.hs = parse_double_field(row[2], line, "hs1");
    e.sea.primary.tp = parse_double_field(row[3], line, "tp1");
    e.sea.primary.dir_deg = wrap360(parse_double_field(row[4], line, "dir1"));
    e.sea.secondary.hs = parse_double_field(row[5], line, "hs2");
    e.sea.secondary.tp = parse_double_field(row[6], line, "tp2");
    e.sea.secondary.dir_deg =
        row[7].empty() ? std::nan("") : wrap360(parse_double_field(row[7], line, "dir2"));
    const double count = parse_double_field(row[8], line, "count");
    if (count < 1.0 || count != std::floor(count))
      throw FormatError("line " + std::to_string(line) + ": count must be a positive integer");
    if (e.sea.primary.hs < 0.0 || e.sea.secondary.hs < 0.0 || e.sea.primary.tp <= 0.0 ||
        e.sea.secondary.tp <= 0.0)
      throw FormatError("line " + std::to_string(line) + ": invalid sea-state parameters");
    e.count = static_cast<std::uint64_t>(count);
    h.add(cell, e);
  }
  return h;
}

void WeatherHistogram::save_csv(const std::filesystem::path& file) const {
  std::ostringstream out;
  out << "lat_bin,lon_bin,hs1,tp1,dir1,hs2,tp2,dir2,count\n";
  for (const auto& [cell, entries] : cells_) {
    for (const auto& e : entries) {
      out << cell.lat_bin << ',' << cell.lon_bin << ',' << fmt_g9(e.sea.primary.hs) << ','
          << fmt_g9(e.sea.primary.tp) << ',' << fmt_g9(e.sea.primary.dir_deg) << ','
          << fmt_g9(e.sea.secondary.hs) << ',' << fmt_g9(e.sea.secondary.tp) << ',';
      if (!std::isnan(e.sea.secondary.dir_deg)) out << fmt_g9(e.sea.secondary.dir_deg);
      out << ',' << e.count << '\n';
    }
  }
  write_file(file, out.str());
}

void WeatherHistogram::add(const GridCell& cell, const WeatherEntry& entry) {
  cells_[cell].push_back(entry);
  basin_.push_back(entry);
}

const std::vector<WeatherEntry>* WeatherHistogram::cell_entries(const GridCell& cell) const {
  auto it = cells_.find(cell);
  return it == cells_.end() ? nullptr : &it->second;
}

BimodalSeaState WeatherHistogram::sample(const GridCell& cell, CounterRng& rng,
                                         bool* used_fallback) const {
  const std::vector<WeatherEntry>* entries = cell_entries(cell);
  const bool fallback = entries == nullptr;
  if (fallback) entries = &basin_;
  if (used_fallback != nullptr) *used_fallback = fallback;
  if (entries->empty()) throw FormatError("sampling from an empty weather histogram");

  std::uint64_t total = 0;
  for (const auto& e : *entries) total += e.count;
  std::uint64_t r = rng.uniform_int(total);
  for (const auto& e : *entries) {
    if (r < e.count) {
      BimodalSeaState sea = e.sea;
      if (std::isnan(sea.secondary.dir_deg))
        sea.secondary.dir_deg =
            wrap360(sea.primary.dir_deg + most_probable_ddir(fallback ? GridCell{} : cell));
      return sea;
    }
    r -= e.count;
  }
  return entries->back().sea;  // unreachable
}

std::vector<CountedCondition> WeatherHistogram::top_conditions(int k, bool* truncated) const {
  if (k < 1) throw std::invalid_argument("top_conditions: k must be >= 1");
  std::map<SeaConditionKey, std::uint64_t> agg;
  for (const auto& [cell, entries] : cells_) {
    const double ddir_fallback = most_probable_ddir(cell);
    for (const auto& e : entries) {
      BimodalSeaState sea = e.sea;
      if (std::isnan(sea.secondary.dir_deg))
        sea.secondary.dir_deg = wrap360(sea.primary.dir_deg + ddir_fallback);
      agg[SeaConditionKey::of(sea)] += e.count;
    }
  }
  std::vector<CountedCondition> all;
  all.reserve(agg.size());
  for (const auto& [key, count] : agg) all.push_back({key, count});
  std::stable_sort(all.begin(), all.end(), [](const CountedCondition& a, const CountedCondition& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.key < b.key;
  });
  const bool trunc = static_cast<std::size_t>(k) > all.size();
  if (truncated != nullptr) *truncated = trunc;
  if (!trunc) all.resize(static_cast<std::size_t>(k));
  return all;
}

double WeatherHistogram::most_probable_ddir(const GridCell& cell) const {
  const std::vector<WeatherEntry>* entries = cell_entries(cell);
  if (entries == nullptr) entries = &basin_;
  std::uint64_t counts[12] = {};
  for (const auto& e : *entries) {
    if (std::isnan(e.sea.secondary.dir_deg)) continue;
    counts[bin_dir30(e.sea.secondary.dir_deg - e.sea.primary.dir_deg)] += e.count;
  }
  int best = 0;
  for (int i = 1; i < 12; ++i)
    if (counts[i] > counts[best]) best = i;
  return best * 30.0 + 15.0;
}

WeatherHistogram synthesize_weather(std::span<const GridCell> cells, std::uint64_t seed,
                                    int entries_per_cell) {
  WeatherHistogram h;
  for (const auto& cell : cells) {
    CounterRng rng = CounterRng::keyed(seed, static_cast<std::uint64_t>(cell.lat_bin),
                                       static_cast<std::uint64_t>(cell.lon_bin));
    for (int i = 0; i < entries_per_cell; ++i) {
      WeatherEntry e;
      // snap parameters to the histogram bin centers so combinations repeat
      auto snap_half = [](double v) { return std::floor(v / 0.5) * 0.5 + 0.25; };
      auto snap_dir = [](double v) { return std::floor(wrap360(v) / 30.0) * 30.0 + 15.0; };
      e.sea.primary.hs = snap_half(rng.uniform(1.0, 6.5));
      e.sea.primary.tp = snap_half(rng.uniform(5.0, 12.0));
      e.sea.primary.dir_deg = snap_dir(rng.uniform(0.0, 360.0));
      e.sea.secondary.hs = snap_half(rng.uniform(0.5, 3.5));
      e.sea.secondary.tp = snap_half(rng.uniform(8.0, 16.0));
      // swell tends to arrive from a quadrant away from the wind sea
      const double ddir = 60.0 + 30.0 * static_cast<double>(rng.uniform_int(4));
      e.sea.secondary.dir_deg =
          rng.uniform01() < 0.1 ? std::nan("")
                                : snap_dir(e.sea.primary.dir_deg + ddir);
      const double u = rng.uniform01();
      e.count = 1 + static_cast<std::uint64_t>(50.0 * u * u * u);
      h.add(cell, e);
    }
  }
  return h;
}

}  // namespace seakeep
