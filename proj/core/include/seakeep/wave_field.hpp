#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "seakeep/spectrum.hpp"

namespace seakeep {

/// Discretized bimodal wave field. Immutable after construction; all
/// evaluation is pure and safe to call from any number of threads.
class WaveField {
 public:
  struct Sample {
    double zeta = 0.0;  // elevation [m]
    double dzdx = 0.0;  // surface slope, field x [rad-equivalent]
    double dzdy = 0.0;
  };

  /// Per-system sample split, used by the force model to attenuate each
  /// spectral system at its own mean wavenumber. Values are un-ramped.
  struct SplitSample {
    Sample system[2];
  };

  WaveField() = default;
  WaveField(std::vector<WaveComponent> primary, std::vector<WaveComponent> secondary,
            double ramp_s, RngKey seed);

  /// Ramped elevation and exact analytic slopes at a space-time point.
  Sample at(double x, double y, double t) const;

  /// Un-ramped per-system evaluation at one point.
  SplitSample split_at(double x, double y, double t) const;

  /// Hot path for the strip force model: evaluate per-system samples at
  /// points (x0 + off*cos_c, y0 + off*sin_c) for each offset. Uses a
  /// sin/cos rotation recurrence when offsets are uniformly spaced.
  void eval_along(double x0, double y0, double cos_c, double sin_c,
                  std::span<const double> offsets, double t,
                  std::span<SplitSample> out) const;

  /// Linear amplitude ramp multiplier: 0 at t<=0 up to 1 at t>=ramp_duration.
  double ramp(double t) const;

  const std::vector<WaveComponent>& components() const { return components_; }
  std::size_t primary_count() const { return primary_count_; }
  double ramp_duration() const { return ramp_s_; }
  const RngKey& seed() const { return seed_; }

  /// Energy-weighted mean wavenumber of a system (0 primary, 1 secondary);
  /// 0 for an empty system.
  double mean_wavenumber(int system) const { return mean_k_[system]; }
  /// Sum of a_i^2/2 over all components.
  double total_variance() const { return total_m0_; }

 private:
  std::vector<WaveComponent> components_;  // primary first, then secondary
  std::size_t primary_count_ = 0;
  double ramp_s_ = 0.0;
  RngKey seed_;
  double mean_k_[2] = {0.0, 0.0};
  double total_m0_ = 0.0;
};

/// Superpose the discretizations of both systems. Primary and secondary use
/// independent RNG substreams of `seed`, so a zero-energy secondary leaves
/// the primary components bit-identical to a primary-only field.
WaveField build_bimodal_field(const BimodalSeaState& sea, int n_per_system, double ramp_s,
                              RngKey seed,
                              Discretization scheme = Discretization::EqualEnergy);

struct TracePoint {
  double t;
  WaveField::Sample s;
};

/// Wave elevation and slopes seen by an observer moving from the origin at
/// `speed` along `course_deg` (0 = +x). Samples i = 0..floor(duration/dt).
std::vector<TracePoint> encounter_trace(const WaveField& f, double speed_mps, double course_deg,
                                        double duration_s, double dt);

/// CSV export: header `t,zeta,dzdx,dzdy`, 9 significant digits.
void write_trace_csv(const std::filesystem::path& file, std::span<const TracePoint> trace);

}  // namespace seakeep
