#pragma once

#include <span>
#include <vector>

#include "seakeep/motion.hpp"

namespace seakeep {

double mean_of(std::span<const double> x);
/// Population standard deviation (1/N).
double population_std(std::span<const double> x);
double median_of(std::vector<double> x);  // by value: partially sorts a copy

/// Mean over realizations of the per-realization population std of a
/// channel, ramp samples excluded.
double ensemble_std(std::span<const MotionRecord> realizations, Channel channel);

struct KdeResult {
  std::vector<double> x;
  std::vector<double> pdf;
  double bandwidth = 0.0;

  /// Trapezoidal integral over the grid (1 by construction).
  double integral() const;
};

/// Gaussian kernel density estimate with Silverman's bandwidth, evaluated on
/// a uniform grid spanning the data +- 3 bandwidths and renormalized on that
/// grid so the emitted pdf integrates to exactly 1.
/// Throws NumericalError when the samples are degenerate (zero spread).
KdeResult gaussian_kde(std::span<const double> samples, int grid_points = 257);

struct XcorrPeak {
  double peak = 0.0;   // normalized cross-correlation at the best lag
  double lag_s = 0.0;  // positive: b lags a
};

/// Peak of the normalized (Pearson) cross-correlation over integer-sample
/// lags within +-max_lag_s.
XcorrPeak xcorr_peak(std::span<const double> a, std::span<const double> b, double dt,
                     double max_lag_s);

}  // namespace seakeep
