#pragma once

#include <map>
#include <string>

#include "seakeep/spectrum.hpp"
#include "seakeep/stats.hpp"

namespace seakeep {

/// Ensemble standard deviations of the three motion channels for one
/// condition at one fidelity.
struct FidelityStats {
  double heave = 0.0;
  double roll = 0.0;
  double pitch = 0.0;

  double dof(int i) const { return i == 0 ? heave : i == 1 ? roll : pitch; }
};

using StatsMap = std::map<std::string, FidelityStats>;

struct CompareRow {
  std::string id;
  BimodalSeaState sea;
  FidelityStats lofi, corrected, reference;
  double err_lofi[3];       // absolute percentage error vs reference, per DOF
  double err_corrected[3];
};

struct CompareReport {
  std::vector<CompareRow> rows;
  double median_err_lofi[3] = {0, 0, 0};
  double median_err_corrected[3] = {0, 0, 0};
  std::string worst_id;  // largest primary + secondary significant wave height
  // [dof][fidelity: 0 lofi, 1 corrected, 2 reference]; empty when < 2 rows
  std::vector<KdeResult> kde[3];
};

/// Align the three stat sets by condition id and assemble error tables, KDE
/// summaries and the worst-condition pick. Throws FormatError listing the
/// missing keys when the sets disagree.
CompareReport compare_report(const StatsMap& lofi, const StatsMap& corrected,
                             const StatsMap& reference,
                             const std::map<std::string, BimodalSeaState>& seas);

/// report.json, error_table.csv and kde_{heave,roll,pitch}.csv under dir.
void write_report_files(const std::filesystem::path& dir, const CompareReport& report,
                        const std::string& config_hash, std::uint64_t master_seed);

}  // namespace seakeep
