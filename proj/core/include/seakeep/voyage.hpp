#pragma once

#include <map>

#include "seakeep/checkpoint.hpp"
#include "seakeep/report.hpp"
#include "seakeep/sim.hpp"
#include "seakeep/weather.hpp"

namespace seakeep {

struct VoyageLeg {
  std::string id;  // "wp012"
  Waypoint wp;
  BimodalSeaState sea_abs;  // sampled from the histogram, absolute directions
  BimodalSeaState sea_rel;  // directions relative to the leg course
  double matched_heading_deg = 0.0;  // nearest trained network heading
  bool basin_fallback = false;
};

struct VoyagePlan {
  GreatCircleRoute route;
  std::vector<VoyageLeg> legs;  // evaluated cells (stride-subsampled)
  double speed_kts = 10.0;
  std::uint64_t master_seed = 0;
};

/// Sample one sea state per evaluated cell; directions become relative to
/// the leg course and the primary relative heading is snapped to the nearest
/// available network heading. Deterministic in (seed, histogram, route):
/// each waypoint draws from its own counter stream keyed by route index.
VoyagePlan build_voyage_plan(const GreatCircleRoute& route, const WeatherHistogram& weather,
                             double speed_kts, std::uint64_t master_seed, int stride,
                             std::span<const double> available_headings);

struct VoyageRunConfig {
  SimConfig sim;  // per-realization duration, coefficients, dt
  int n_per_system = 100;
  Discretization scheme = Discretization::EqualEnergy;
  int realizations = 5;
  int jobs = 1;
};

struct WaypointStats {
  std::string id;
  FidelityStats lofi, corrected, reference;
  bool truncated = false;  // any realization left the validity range
};

struct VoyageResult {
  VoyagePlan plan;
  std::vector<WaypointStats> stats;
  CompareReport report;
  std::size_t worst_index = 0;  // leg with the largest hs1 + hs2
  MotionRecord worst_lofi, worst_corrected, worst_reference;
};

/// Simulate every leg at both fidelities, correct the lo-fi records through
/// the per-heading networks, and assemble ensemble statistics plus the
/// comparison report. Throws FormatError when a required heading has no
/// checkpoint.
VoyageResult run_voyage(const HydroModel& model, const VoyagePlan& plan,
                        const std::map<double, Checkpoint>& checkpoints,
                        const VoyageRunConfig& cfg);

/// voyage_summary.json, report files and the worst-condition record triplet.
void write_voyage_files(const std::filesystem::path& dir, const VoyageResult& result,
                        const std::string& config_hash);

}  // namespace seakeep
