#pragma once

#include <span>

#include "seakeep/lstm.hpp"

namespace seakeep {

/// Per-channel z-scoring statistics for the 6 input and 3 target channels,
/// fitted on the training split only.
struct Standardizer {
  Vec mean_in, std_in;    // input channels
  Vec mean_out, std_out;  // target channels

  Mat apply_inputs(const Eigen::Ref<const Mat>& x) const;
  Mat apply_targets(const Eigen::Ref<const Mat>& y) const;
  Mat invert_targets(const Eigen::Ref<const Mat>& y) const;
  void validate() const;
};

/// Channel statistics over concatenated training matrices (population std).
/// Throws NumericalError on a zero-variance channel.
Standardizer fit_standardizer(std::span<const Mat> train_inputs, std::span<const Mat> train_targets);

}  // namespace seakeep
