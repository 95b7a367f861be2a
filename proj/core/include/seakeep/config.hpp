#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "seakeep/geo.hpp"
#include "seakeep/hull.hpp"
#include "seakeep/sim.hpp"
#include "seakeep/spectrum.hpp"
#include "seakeep/train.hpp"

namespace seakeep {

/// Full pipeline configuration. Profiles set the campaign scale:
///   canonical - the published study layout (100 conditions x 12 headings,
///               5 realizations, 1920 s records, hidden 150, 100 epochs)
///   desk      - reduced counts and sequence lengths for workstation runs;
///               physics constants and time steps are identical.
struct RunConfig {
  std::string profile = "desk";
  std::uint64_t master_seed = 0;

  HullKind hull_kind = HullKind::FrigateParametric;
  HullParticulars hull;

  int n_per_system = 100;
  Discretization scheme = Discretization::EqualEnergy;

  SimConfig sim;

  int conditions_k = 12;
  std::vector<double> headings;
  int realizations = 2;
  int split_train = 10, split_val = 5, split_test = 5;

  TrainConfig train;

  LatLon voyage_start{36.85, -76.29};  // Norfolk
  LatLon voyage_end{60.39, 5.32};      // Bergen
  int voyage_stride = 20;
  int voyage_realizations = 2;

  std::string out_dir = "out";

  static RunConfig defaults(const std::string& profile);
  /// Load from JSON; unknown keys are format errors. Optional overrides take
  /// precedence over the file contents.
  static RunConfig load(const std::filesystem::path& file,
                        const std::optional<std::string>& profile_override = std::nullopt,
                        const std::optional<std::uint64_t>& seed_override = std::nullopt);

  /// Deterministic JSON rendering (sorted keys) used for hashing and echoes.
  std::string canonical_json() const;
  /// FNV-1a 64 hash of canonical_json(), as 16 hex digits.
  std::string config_hash() const;
  void validate() const;
};

}  // namespace seakeep
