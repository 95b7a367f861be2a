#include "seakeep/standardizer.hpp"

#include <cmath>

#include "seakeep/errors.hpp"

namespace seakeep {

namespace {

Mat scale_rows(const Eigen::Ref<const Mat>& x, const Vec& mean, const Vec& std, bool invert) {
  if (x.rows() != mean.size()) throw std::invalid_argument("standardizer: channel count mismatch");
  Mat out(x.rows(), x.cols());
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    if (invert)
      out.row(r) = x.row(r) * std[r] + Mat::Constant(1, x.cols(), mean[r]);
    else
      out.row(r) = (x.row(r) - Mat::Constant(1, x.cols(), mean[r])) / std[r];
  }
  return out;
}

void fit_rows(std::span<const Mat> blocks, Vec& mean, Vec& std) {
  if (blocks.empty()) throw std::invalid_argument("fit_standardizer: empty training set");
  const Eigen::Index rows = blocks.front().rows();
  mean = Vec::Zero(rows);
  std = Vec::Zero(rows);
  double n = 0.0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("fit_standardizer: channel count mismatch");
    mean += b.rowwise().sum();
    n += static_cast<double>(b.cols());
  }
  mean /= n;
  for (const auto& b : blocks)
    for (Eigen::Index r = 0; r < rows; ++r)
      std[r] += (b.row(r).array() - mean[r]).square().sum();
  for (Eigen::Index r = 0; r < rows; ++r) {
    std[r] = std::sqrt(std[r] / n);
    if (std[r] < 1e-12)
      throw NumericalError("zero-variance channel " + std::to_string(r) +
                           " cannot be standardized");
  }
}

}  // namespace

Mat Standardizer::apply_inputs(const Eigen::Ref<const Mat>& x) const {
  return scale_rows(x, mean_in, std_in, false);
}

Mat Standardizer::apply_targets(const Eigen::Ref<const Mat>& y) const {
  return scale_rows(y, mean_out, std_out, false);
}

Mat Standardizer::invert_targets(const Eigen::Ref<const Mat>& y) const {
  return scale_rows(y, mean_out, std_out, true);
}

void Standardizer::validate() const {
  for (Eigen::Index i = 0; i < std_in.size(); ++i)
    if (!(std_in[i] > 0.0)) throw NumericalError("input std must be positive");
  for (Eigen::Index i = 0; i < std_out.size(); ++i)
    if (!(std_out[i] > 0.0)) throw NumericalError("target std must be positive");
}

Standardizer fit_standardizer(std::span<const Mat> train_inputs,
                              std::span<const Mat> train_targets) {
  Standardizer s;
  fit_rows(train_inputs, s.mean_in, s.std_in);
  fit_rows(train_targets, s.mean_out, s.std_out);
  return s;
}

}  // namespace seakeep
