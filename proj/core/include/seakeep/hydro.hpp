#pragma once

#include <optional>
#include <vector>

#include "seakeep/bonjean.hpp"
#include "seakeep/wave_field.hpp"

namespace seakeep {

/// Body pose relative to the solved static equilibrium.
/// Sign conventions (right-handed, x forward, y port, z up):
///   roll  > 0 : port side up
///   pitch > 0 : bow down
struct Pose {
  double z = 0.0;       // heave displacement above equilibrium [m]
  double roll = 0.0;    // [rad]
  double pitch = 0.0;   // [rad]
  double x = 0.0;       // CG position in the field frame [m]
  double y = 0.0;
  double course = 0.0;  // ship heading in the field frame [rad]
};

struct GeneralizedForce {
  double heave_n = 0.0;
  double roll_nm = 0.0;
  double pitch_nm = 0.0;
};

/// Per-station force densities (buoyant + Froude-Krylov, gravity excluded).
struct SectionalForcing {
  std::vector<double> x;            // station positions from FP [m]
  std::vector<double> heave_n_m;    // [N/m]
  std::vector<double> roll_nm_m;    // [N*m/m]
  std::vector<double> pitch_nm_m;   // [N*m/m]
};

struct Hydrostatics {
  double volume_m3 = 0.0;
  double awp_m2 = 0.0;
  double kb_m = 0.0;
  double bm_t_m = 0.0;
  double bm_l_m = 0.0;
  double gm_t_m = 0.0;
  double gm_l_m = 0.0;
  double c33 = 0.0;  // heave restoring slope [N/m]
  double c44 = 0.0;  // roll restoring slope [N*m/rad]
  double c55 = 0.0;  // pitch restoring slope [N*m/rad]
};

/// Volume-based hydrostatic + Froude-Krylov force model over precomputed
/// Bonjean tables. The local incident surface elevation at each station sets
/// the sectional waterline; dynamic pressure attenuation is a per-system
/// factor exp(-k_mean * d_eff) with d_eff twice the sectional centroid depth,
/// which reproduces bottom-pressure decay exactly on wall-sided sections.
/// Immutable after set_equilibrium; force evaluation is pure.
class HydroModel {
 public:
  explicit HydroModel(HullOffsets hull, int n_z = 101);

  const HullOffsets& hull() const { return hull_; }
  const BonjeanTable& bonjean() const { return bonjean_; }

  void set_equilibrium(double draft_lcg, double trim_rad);
  bool has_equilibrium() const { return ref_.has_value(); }
  double draft_lcg() const;
  double trim() const;

  /// Generalized force about the CG for a pose relative to equilibrium.
  /// Throws ModelRangeError when |roll| or |pitch| exceed 45 degrees.
  GeneralizedForce forces(const WaveField& field, const Pose& pose, double t,
                          SectionalForcing* sections = nullptr) const;

  /// Calm-water force at an absolute floating position (used by the
  /// equilibrium solver; no equilibrium reference required).
  GeneralizedForce calm_forces_abs(double draft_lcg, double trim_rad) const;

  /// Calm-water force at a pose relative to equilibrium.
  GeneralizedForce calm_forces(const Pose& pose) const;

  /// Level-waterline hydrostatics at the solved equilibrium draft.
  Hydrostatics hydrostatics() const;

  double mass_kg() const { return hull_.particulars.mass_kg(); }
  double ixx() const { return hull_.particulars.ixx(); }
  double iyy() const { return hull_.particulars.iyy(); }

 private:
  struct Reference {
    double draft_lcg;
    double trim;
  };

  GeneralizedForce strip_forces(const WaveField* field, double draft_lcg, double total_trim,
                                double roll, const Pose* pose, double t,
                                SectionalForcing* sections) const;

  HullOffsets hull_;
  BonjeanTable bonjean_;
  std::vector<double> levers_;  // lcg - station_x, +forward
  std::optional<Reference> ref_;
};

}  // namespace seakeep
