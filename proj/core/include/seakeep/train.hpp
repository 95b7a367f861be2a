#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "seakeep/lstm.hpp"
#include "seakeep/motion.hpp"
#include "seakeep/standardizer.hpp"

namespace seakeep {

struct TrainConfig {
  int epochs = 100;
  int sequence_steps = 18000;  // N, taken after the ramp samples
  int resolution_factor = 9;   // truncated-BPTT chunks per sequence
  int hidden = 150;
  int n_layers = 3;
  double learning_rate = 1e-3;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  double clip_norm = 5.0;
  int batch_size = 1;
  bool shuffle = true;
  double divergence_loss = 1e6;
  std::uint64_t seed = 0;

  int chunk_steps() const { return sequence_steps / resolution_factor; }
  void validate() const;
};

/// Gradient (or Adam moment) storage shaped like a network.
struct NetGrads {
  struct LayerGrads {
    Mat w_in, w_rec;
    Vec bias;
  };
  std::vector<LayerGrads> layers;
  Mat dense_w;
  Vec dense_b;

  static NetGrads zeros_like(const LstmNetwork& net);
  void add(const NetGrads& other);
  void scale(double s);
  double global_norm() const;
};

/// Reverse-mode gradients of mse(target, forward(input)) through the full
/// chunk. `state` carries h/c across chunks (treated as constants by the
/// backward pass) and is advanced to the chunk end. Returns the chunk loss
/// and accumulates into `grads`.
double bptt_gradients(const LstmNetwork& net, const Eigen::Ref<const Mat>& input,
                      const Eigen::Ref<const Mat>& target, NetState& state, NetGrads& grads);

/// Whole-sequence convenience overload (zero initial state, fresh gradients).
NetGrads bptt_gradients(const LstmNetwork& net, const Eigen::Ref<const Mat>& input,
                        const Eigen::Ref<const Mat>& target, double* loss_out = nullptr);

class AdamOptimizer {
 public:
  AdamOptimizer(const LstmNetwork& net, double lr, double beta1, double beta2, double eps);
  void step(LstmNetwork& net, const NetGrads& grads);
  std::int64_t steps() const { return t_; }

 private:
  double lr_, beta1_, beta2_, eps_;
  std::int64_t t_ = 0;
  NetGrads m_, v_;
};

/// One standardized training sequence: inputs 6 x N, targets 3 x N.
struct SequenceSample {
  Mat inputs;
  Mat targets;
  std::string id;
};

struct Dataset {
  std::vector<SequenceSample> train, val, test;
  Standardizer standardizer;
};

/// Raw (unstandardized) channel matrices from a record pair, post-ramp.
Mat record_inputs(const MotionRecord& lofi, std::size_t start, std::size_t n);
Mat record_targets(const MotionRecord& hifi, std::size_t start, std::size_t n);

/// Pair lo-fi/hi-fi records (matched order), split by realization into
/// train/val/test counts, fit the standardizer on the training split only,
/// and standardize everything with it.
Dataset build_dataset(std::span<const MotionRecord> lofi, std::span<const MotionRecord> hifi,
                      const TrainConfig& cfg, int n_train, int n_val, int n_test,
                      std::vector<std::string>* split_manifest = nullptr);

struct EpochLoss {
  double train_mse;
  double val_mse;
};

struct TrainResult {
  LstmNetwork net;
  std::vector<EpochLoss> history;
};

/// Adam on truncated-BPTT chunk gradients, deterministic under a fixed seed.
/// Throws TrainingDiverged (with history) when a chunk loss exceeds
/// cfg.divergence_loss.
TrainResult train(LstmNetwork net, const Dataset& data, const TrainConfig& cfg);

/// Standardize the lo-fi channels, run the network, de-standardize the
/// outputs: a corrected record on the original time base with wave channels
/// passed through. Fidelity tag becomes "lstm-corrected".
MotionRecord correct(const LstmNetwork& net, const Standardizer& std, const MotionRecord& lofi);

}  // namespace seakeep
