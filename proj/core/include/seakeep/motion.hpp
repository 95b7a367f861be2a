#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "seakeep/rng.hpp"
#include "seakeep/spectrum.hpp"

namespace seakeep {

enum class Channel { Heave, Roll, Pitch, Zeta, DzDx, DzDy };

struct RecordMeta {
  BimodalSeaState sea;         // directions relative to the ordered course
  double heading_deg = 0.0;    // ordered primary relative wave heading
  double speed_kts = 0.0;
  RngKey seed;
  std::string fidelity;        // "lofi" | "hifi-ref" | "lstm-corrected" | "imported"
  std::string hull_id;
  int ramp_samples = 0;        // leading samples affected by the wave ramp
  bool truncated = false;      // simulation left the model validity range
  std::string config_hash;
};

/// Uniformly sampled motion + wave channels for one realization.
struct MotionRecord {
  double dt = 0.1;
  std::vector<double> t;
  std::vector<double> heave_m;
  std::vector<double> roll_deg;
  std::vector<double> pitch_deg;
  std::vector<double> zeta_m;
  std::vector<double> dzdx;
  std::vector<double> dzdy;
  RecordMeta meta;

  std::size_t size() const { return t.size(); }
  std::span<const double> channel(Channel c) const;
  void validate() const;  // equal channel lengths, uniform grid
};

/// CSV with header `t,heave_m,roll_deg,pitch_deg,zeta_m,dzdx,dzdy` at 9
/// significant digits, plus a `<file>.meta.json` sidecar carrying metadata
/// and an FNV-1a checksum of the CSV bytes.
void write_motion_csv(const std::filesystem::path& file, const MotionRecord& rec);

/// Import a record; validates the schema and the uniform time grid
/// (jitter > 1e-6 s rejected). The sidecar is optional for external data.
MotionRecord import_motion_record(const std::filesystem::path& file);

/// True when file + sidecar exist, the checksum matches and the metadata
/// agrees with (seed, config_hash). Used for resume.
bool motion_record_valid(const std::filesystem::path& file, const RngKey& seed,
                         const std::string& config_hash);

}  // namespace seakeep
