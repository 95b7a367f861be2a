#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace seakeep {

// Error taxonomy mirrors the CLI exit codes: FormatError -> 2, NumericalError -> 3.
// Argument/domain misuse keeps the standard library types.

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Pose or state outside the range where the force model is meaningful.
struct ModelRangeError : NumericalError {
  using NumericalError::NumericalError;
};

struct EquilibriumError : NumericalError {
  using NumericalError::NumericalError;
};

struct IntegrationError : NumericalError {
  using NumericalError::NumericalError;
};

/// Training aborted; carries the per-epoch (train, val) losses seen so far.
struct TrainingDiverged : NumericalError {
  TrainingDiverged(const std::string& what, std::vector<std::pair<double, double>> hist)
      : NumericalError(what), history(std::move(hist)) {}
  std::vector<std::pair<double, double>> history;
};

}  // namespace seakeep
