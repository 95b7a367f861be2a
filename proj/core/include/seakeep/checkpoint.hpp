#pragma once

#include <filesystem>
#include <string>

#include "seakeep/train.hpp"

namespace seakeep {

/// A trained network with everything needed to apply it.
struct Checkpoint {
  LstmNetwork net;
  Standardizer standardizer;
  TrainConfig train_config;
  double heading_deg = 0.0;
  std::string config_hash;
  std::uint64_t master_seed = 0;
};

/// Versioned JSON: layer shapes, row-major parameter arrays (full double
/// precision), standardizer statistics and the training configuration.
void save_checkpoint(const std::filesystem::path& file, const Checkpoint& ck);

/// Loads and validates shapes and version; throws FormatError on mismatch.
Checkpoint load_checkpoint(const std::filesystem::path& file);

}  // namespace seakeep
