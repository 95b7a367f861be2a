#include "seakeep/lstm.hpp"

#include <cmath>
#include <stdexcept>

namespace seakeep {

namespace {

inline double sigmoid(double v) { return 1.0 / (1.0 + std::exp(-v)); }

}  // namespace

LstmLayer LstmLayer::zeros(int input, int hidden) {
  LstmLayer l;
  l.w_in = Mat::Zero(4 * hidden, input);
  l.w_rec = Mat::Zero(4 * hidden, hidden);
  l.bias = Vec::Zero(4 * hidden);
  return l;
}

LstmLayer LstmLayer::init_random(int input, int hidden, CounterRng& rng) {
  LstmLayer l = zeros(input, hidden);
  const double scale = 1.0 / std::sqrt(static_cast<double>(hidden));
  for (int i = 0; i < l.w_in.rows(); ++i)
    for (int j = 0; j < l.w_in.cols(); ++j) l.w_in(i, j) = rng.uniform(-scale, scale);
  for (int i = 0; i < l.w_rec.rows(); ++i)
    for (int j = 0; j < l.w_rec.cols(); ++j) l.w_rec(i, j) = rng.uniform(-scale, scale);
  l.bias.segment(0, hidden).setOnes();  // open forget gates at init
  return l;
}

CellState cell_forward(const LstmLayer& layer, const Eigen::Ref<const Vec>& x,
                       const CellState& prev) {
  const int h = layer.hidden();
  if (x.size() != layer.input() || prev.h.size() != h || prev.c.size() != h)
    throw std::invalid_argument("cell_forward: dimension mismatch");

  Vec pre = layer.w_in * x + layer.w_rec * prev.h + layer.bias;
  CellState out;
  out.c.resize(h);
  out.h.resize(h);
  for (int i = 0; i < h; ++i) {
    const double f1 = sigmoid(pre[i]);            // forget
    const double f2 = sigmoid(pre[h + i]);        // input
    const double f3 = std::tanh(pre[2 * h + i]);  // candidate
    const double f4 = sigmoid(pre[3 * h + i]);    // output
    out.c[i] = f1 * prev.c[i] + f2 * f3;
    out.h[i] = f4 * std::tanh(out.c[i]);
  }
  return out;
}

std::size_t LstmNetwork::parameter_count() const {
  std::size_t n =
      static_cast<std::size_t>(dense_w.size()) + static_cast<std::size_t>(dense_b.size());
  for (const auto& l : layers)
    n += static_cast<std::size_t>(l.w_in.size() + l.w_rec.size() + l.bias.size());
  return n;
}

void LstmNetwork::validate() const {
  if (layers.empty()) throw std::invalid_argument("network needs at least one layer");
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const auto& l = layers[i];
    if (l.w_in.rows() != 4 * l.hidden() || l.w_rec.rows() != 4 * l.hidden() ||
        l.bias.size() != 4 * l.hidden())
      throw std::invalid_argument("layer " + std::to_string(i) + ": inconsistent gate shapes");
    if (i > 0 && l.input() != layers[i - 1].hidden())
      throw std::invalid_argument("layer " + std::to_string(i) +
                                  ": input width must equal previous hidden width");
  }
  if (dense_w.cols() != layers.back().hidden() || dense_b.size() != dense_w.rows())
    throw std::invalid_argument("dense head shape mismatch");
}

LstmNetwork LstmNetwork::create(int input, int hidden, int n_layers, int output,
                                CounterRng& rng) {
  LstmNetwork net;
  for (int i = 0; i < n_layers; ++i)
    net.layers.push_back(LstmLayer::init_random(i == 0 ? input : hidden, hidden, rng));
  const double scale = 1.0 / std::sqrt(static_cast<double>(hidden));
  net.dense_w = Mat::Zero(output, hidden);
  for (int i = 0; i < output; ++i)
    for (int j = 0; j < hidden; ++j) net.dense_w(i, j) = rng.uniform(-scale, scale);
  net.dense_b = Vec::Zero(output);
  net.validate();
  return net;
}

LstmNetwork LstmNetwork::zeros(int input, int hidden, int n_layers, int output) {
  LstmNetwork net;
  for (int i = 0; i < n_layers; ++i)
    net.layers.push_back(LstmLayer::zeros(i == 0 ? input : hidden, hidden));
  net.dense_w = Mat::Zero(output, hidden);
  net.dense_b = Vec::Zero(output);
  net.validate();
  return net;
}

NetState NetState::zeros(const LstmNetwork& net) {
  NetState s;
  for (const auto& l : net.layers) s.layer.push_back(CellState::zeros(l.hidden()));
  return s;
}

Mat network_forward(const LstmNetwork& net, const Eigen::Ref<const Mat>& x_seq) {
  NetState state = NetState::zeros(net);
  return network_forward(net, x_seq, state);
}

Mat network_forward(const LstmNetwork& net, const Eigen::Ref<const Mat>& x_seq,
                    NetState& state) {
  net.validate();
  if (x_seq.rows() != net.input_width())
    throw std::invalid_argument("network_forward: input width mismatch");
  const auto t_len = x_seq.cols();
  Mat out(net.output_width(), t_len);
  Vec x;
  for (Eigen::Index t = 0; t < t_len; ++t) {
    x = x_seq.col(t);
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
      state.layer[l] = cell_forward(net.layers[l], x, state.layer[l]);
      x = state.layer[l].h;
    }
    out.col(t) = net.dense_w * x + net.dense_b;
  }
  return out;
}

double mse(const Eigen::Ref<const Mat>& target, const Eigen::Ref<const Mat>& output) {
  if (target.rows() != output.rows() || target.cols() != output.cols())
    throw std::invalid_argument("mse: shape mismatch");
  const double n = static_cast<double>(target.size());
  return (output - target).squaredNorm() / n;
}

}  // namespace seakeep
