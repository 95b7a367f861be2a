#pragma once

#include <Eigen/Core>
#include <vector>

#include "seakeep/rng.hpp"

namespace seakeep {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// One LSTM layer. The four gate blocks (forget, input, candidate, output)
/// are packed row-wise into 4H x * matrices; rows [gH, (g+1)H) belong to
/// gate g in that order.
struct LstmLayer {
  Mat w_in;   // 4H x input
  Mat w_rec;  // 4H x H
  Vec bias;   // 4H

  int hidden() const { return static_cast<int>(w_rec.cols()); }
  int input() const { return static_cast<int>(w_in.cols()); }

  static LstmLayer zeros(int input, int hidden);
  /// Uniform +-1/sqrt(hidden) weights, zero biases, forget-gate bias +1.
  static LstmLayer init_random(int input, int hidden, CounterRng& rng);
};

struct CellState {
  Vec h;
  Vec c;
  static CellState zeros(int hidden) { return {Vec::Zero(hidden), Vec::Zero(hidden)}; }
};

/// Single-step cell update:
///   f1 = sigmoid(W1 x + U1 h + b1)        (forget)
///   f2 = sigmoid(W2 x + U2 h + b2)        (input)
///   f3 = tanh   (W3 x + U3 h + b3)        (candidate)
///   f4 = sigmoid(W4 x + U4 h + b4)        (output)
///   c  = f1 .* c_prev + f2 .* f3
///   h  = f4 .* tanh(c)
CellState cell_forward(const LstmLayer& layer, const Eigen::Ref<const Vec>& x,
                       const CellState& prev);

/// Stacked layers plus a dense output head y = Wd h + bd applied per step.
struct LstmNetwork {
  std::vector<LstmLayer> layers;
  Mat dense_w;  // out x H
  Vec dense_b;  // out

  int input_width() const { return layers.empty() ? 0 : layers.front().input(); }
  int hidden_width() const { return layers.empty() ? 0 : layers.front().hidden(); }
  int output_width() const { return static_cast<int>(dense_w.rows()); }
  std::size_t parameter_count() const;
  void validate() const;

  static LstmNetwork create(int input, int hidden, int n_layers, int output, CounterRng& rng);
  static LstmNetwork zeros(int input, int hidden, int n_layers, int output);
};

/// Per-layer recurrent state of a network.
struct NetState {
  std::vector<CellState> layer;
  static NetState zeros(const LstmNetwork& net);
};

/// Forward pass over a sequence (columns = time steps), states zero at start.
Mat network_forward(const LstmNetwork& net, const Eigen::Ref<const Mat>& x_seq);
/// Forward pass carrying recurrent state across calls.
Mat network_forward(const LstmNetwork& net, const Eigen::Ref<const Mat>& x_seq, NetState& state);

/// Mean over all time steps and channels of the squared difference.
double mse(const Eigen::Ref<const Mat>& target, const Eigen::Ref<const Mat>& output);

}  // namespace seakeep
