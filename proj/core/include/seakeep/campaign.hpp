#pragma once

#include <filesystem>

#include "seakeep/checkpoint.hpp"
#include "seakeep/config.hpp"
#include "seakeep/weather.hpp"

namespace seakeep {

/// One (condition x heading) simulation setup. Directions are relative to
/// the ordered course: primary at the grid heading, secondary offset by the
/// condition's direction difference.
struct ManifestRow {
  std::string id;  // "c007_h240"
  int cond_index = 0;
  double heading_deg = 0.0;
  BimodalSeaState sea_rel;
  SeaConditionKey key;
  std::uint64_t observations = 0;
};

struct Manifest {
  std::vector<ManifestRow> rows;
  std::string config_hash;
  std::uint64_t master_seed = 0;
  bool truncated = false;  // histogram had fewer than k distinct conditions

  void save(const std::filesystem::path& file) const;
  static Manifest load(const std::filesystem::path& file);
};

/// Top-k histogram conditions crossed with the configured heading grid.
Manifest gen_conditions(const RunConfig& cfg, const WeatherHistogram& weather);

enum class Fidelity { Lofi, HifiRef };

struct CampaignOutcome {
  int simulated = 0;
  int skipped = 0;  // valid outputs already present (resume)
  int failed = 0;
  std::vector<std::string> errors;
};

/// Record file path for one (row, realization, fidelity).
std::filesystem::path record_path(const std::filesystem::path& records_dir,
                                  const std::string& row_id, int realization, Fidelity f);

/// Run every (row x realization) at one fidelity, writing record CSVs and
/// sidecars under records_dir. Existing valid outputs are skipped; per-run
/// failures are logged and the campaign continues.
CampaignOutcome run_simulations(const RunConfig& cfg, const Manifest& manifest,
                                const HydroModel& model, Fidelity fidelity,
                                const std::filesystem::path& records_dir, int jobs);

/// Matched lo-fi / reference record pairs for one heading, manifest order.
struct HeadingRecords {
  std::vector<MotionRecord> lofi;
  std::vector<MotionRecord> hifi;
};
HeadingRecords load_heading_records(const std::filesystem::path& records_dir,
                                    const Manifest& manifest, double heading_deg,
                                    int realizations);

struct TrainOutput {
  Checkpoint checkpoint;
  std::vector<EpochLoss> history;
  std::vector<std::string> split_manifest;
};

/// Dataset assembly + training for one heading's network.
TrainOutput train_heading(const RunConfig& cfg, const Manifest& manifest,
                          const std::filesystem::path& records_dir, double heading_deg);

void write_loss_csv(const std::filesystem::path& file, std::span<const EpochLoss> history,
                    const std::string& config_hash, std::uint64_t master_seed);

/// The per-heading checkpoint/loss/split file names used by the CLI.
std::string heading_tag(double heading_deg);

}  // namespace seakeep
