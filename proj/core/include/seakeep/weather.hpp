#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <vector>

#include "seakeep/geo.hpp"
#include "seakeep/rng.hpp"
#include "seakeep/spectrum.hpp"

namespace seakeep {

/// Binned condition identity, following the histogram key convention:
/// Hs to 0.5 m, Tp to 0.5 s, direction difference to 30 degrees.
struct SeaConditionKey {
  int hs1 = 0, tp1 = 0, hs2 = 0, tp2 = 0, ddir = 0;

  static SeaConditionKey of(const BimodalSeaState& sea);
  /// Representative sea state at the bin centers; directions are left
  /// relative: primary at 0, secondary at the direction difference.
  BimodalSeaState representative() const;
  auto operator<=>(const SeaConditionKey&) const = default;
};

struct WeatherEntry {
  BimodalSeaState sea;  // absolute directions; secondary dir may be NaN
  std::uint64_t count = 0;
};

struct CountedCondition {
  SeaConditionKey key;
  std::uint64_t count = 0;
};

/// Per-cell observed sea-state combinations with observation counts, plus the
/// basin-wide aggregate. Immutable after load; sampling is pure given an rng.
class WeatherHistogram {
 public:
  /// CSV schema: lat_bin,lon_bin,hs1,tp1,dir1,hs2,tp2,dir2,count.
  /// dir2 may be empty (resolved by the most probable direction difference
  /// at sampling time). Malformed rows are reported with line numbers.
  static WeatherHistogram load_csv(const std::filesystem::path& file);
  void save_csv(const std::filesystem::path& file) const;

  void add(const GridCell& cell, const WeatherEntry& entry);

  bool empty() const { return cells_.empty(); }
  std::size_t cell_count() const { return cells_.size(); }
  const std::vector<WeatherEntry>* cell_entries(const GridCell& cell) const;

  /// Draw proportional to counts from the cell (or the basin aggregate when
  /// the cell is absent; *used_fallback reports which). A missing secondary
  /// direction resolves to primary + most probable direction difference.
  BimodalSeaState sample(const GridCell& cell, CounterRng& rng,
                         bool* used_fallback = nullptr) const;

  /// Top-k binned (hs1, tp1, hs2, tp2, ddir) combinations by total count,
  /// ties broken lexicographically. If fewer than k exist, returns all and
  /// sets *truncated.
  std::vector<CountedCondition> top_conditions(int k, bool* truncated = nullptr) const;

  /// Most probable (dir2 - dir1) bin in a cell, degrees in [0, 360).
  double most_probable_ddir(const GridCell& cell) const;

 private:
  std::map<GridCell, std::vector<WeatherEntry>> cells_;
  std::vector<WeatherEntry> basin_;
};

/// Synthetic stand-in for a hindcast climatology: plausible December North
/// Atlantic wind-sea/swell combinations over the given cells, deterministic
/// in the seed.
WeatherHistogram synthesize_weather(std::span<const GridCell> cells, std::uint64_t seed,
                                    int entries_per_cell = 6);

}  // namespace seakeep
