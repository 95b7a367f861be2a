#include "seakeep/train.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "seakeep/errors.hpp"

namespace seakeep {

void TrainConfig::validate() const {
  if (epochs < 1 || sequence_steps < 1 || hidden < 1 || n_layers < 1 || batch_size < 1)
    throw std::invalid_argument("train config values must be positive");
  if (resolution_factor < 1 || sequence_steps % resolution_factor != 0)
    throw std::invalid_argument("sequence_steps must be divisible by resolution_factor");
  if (!(learning_rate >= 0.0) || !(clip_norm > 0.0))
    throw std::invalid_argument("bad optimizer parameters");
}

NetGrads NetGrads::zeros_like(const LstmNetwork& net) {
  NetGrads g;
  for (const auto& l : net.layers) {
    LayerGrads lg;
    lg.w_in = Mat::Zero(l.w_in.rows(), l.w_in.cols());
    lg.w_rec = Mat::Zero(l.w_rec.rows(), l.w_rec.cols());
    lg.bias = Vec::Zero(l.bias.size());
    g.layers.push_back(std::move(lg));
  }
  g.dense_w = Mat::Zero(net.dense_w.rows(), net.dense_w.cols());
  g.dense_b = Vec::Zero(net.dense_b.size());
  return g;
}

void NetGrads::add(const NetGrads& other) {
  for (std::size_t i = 0; i < layers.size(); ++i) {
    layers[i].w_in += other.layers[i].w_in;
    layers[i].w_rec += other.layers[i].w_rec;
    layers[i].bias += other.layers[i].bias;
  }
  dense_w += other.dense_w;
  dense_b += other.dense_b;
}

void NetGrads::scale(double s) {
  for (auto& l : layers) {
    l.w_in *= s;
    l.w_rec *= s;
    l.bias *= s;
  }
  dense_w *= s;
  dense_b *= s;
}

double NetGrads::global_norm() const {
  double sq = dense_w.squaredNorm() + dense_b.squaredNorm();
  for (const auto& l : layers)
    sq += l.w_in.squaredNorm() + l.w_rec.squaredNorm() + l.bias.squaredNorm();
  return std::sqrt(sq);
}

namespace {

// RNG substream ids for the dataset split and the per-epoch shuffle
constexpr std::uint64_t kSplitStream = 101;
constexpr std::uint64_t kShuffleStream = 102;

inline double sigmoid(double v) { return 1.0 / (1.0 + std::exp(-v)); }

/// Per-layer forward trace over a chunk.
struct LayerTrace {
  Mat gates;   // 4H x T, activated (f1..f4 stacked)
  Mat c;       // H x T
  Mat tanh_c;  // H x T
  Mat h;       // H x T
};

}  // namespace

double bptt_gradients(const LstmNetwork& net, const Eigen::Ref<const Mat>& input,
                      const Eigen::Ref<const Mat>& target, NetState& state, NetGrads& grads) {
  net.validate();
  const auto t_len = input.cols();
  if (input.rows() != net.input_width()) throw std::invalid_argument("bptt: input width mismatch");
  if (target.rows() != net.output_width() || target.cols() != t_len)
    throw std::invalid_argument("bptt: target shape mismatch");

  const std::size_t n_layers = net.layers.size();
  std::vector<LayerTrace> trace(n_layers);
  std::vector<CellState> state0 = state.layer;  // chunk-entry state (constant for backward)
  for (std::size_t l = 0; l < n_layers; ++l) {
    const int h = net.layers[l].hidden();
    trace[l].gates.resize(4 * h, t_len);
    trace[l].c.resize(h, t_len);
    trace[l].tanh_c.resize(h, t_len);
    trace[l].h.resize(h, t_len);
  }

  // forward with cached activations
  Mat output(net.output_width(), t_len);
  Vec x;
  for (Eigen::Index t = 0; t < t_len; ++t) {
    x = input.col(t);
    for (std::size_t l = 0; l < n_layers; ++l) {
      const auto& layer = net.layers[l];
      const int h = layer.hidden();
      Vec pre = layer.w_in * x + layer.w_rec * state.layer[l].h + layer.bias;
      auto g = trace[l].gates.col(t);
      for (int i = 0; i < h; ++i) {
        g[i] = sigmoid(pre[i]);
        g[h + i] = sigmoid(pre[h + i]);
        g[2 * h + i] = std::tanh(pre[2 * h + i]);
        g[3 * h + i] = sigmoid(pre[3 * h + i]);
      }
      Vec c_new(h), h_new(h);
      for (int i = 0; i < h; ++i) {
        c_new[i] = g[i] * state.layer[l].c[i] + g[h + i] * g[2 * h + i];
        const double th = std::tanh(c_new[i]);
        trace[l].tanh_c(i, t) = th;
        h_new[i] = g[3 * h + i] * th;
      }
      trace[l].c.col(t) = c_new;
      trace[l].h.col(t) = h_new;
      state.layer[l].c = std::move(c_new);
      state.layer[l].h = std::move(h_new);
      x = trace[l].h.col(t);
      if (!x.allFinite())
        throw NumericalError("non-finite activation in layer " + std::to_string(l) + " at step " +
                             std::to_string(t));
    }
    output.col(t) = net.dense_w * x + net.dense_b;
  }

  const double denom = static_cast<double>(target.size());
  const double loss = (output - target).squaredNorm() / denom;

  // reverse pass
  std::vector<Vec> dh(n_layers), dc(n_layers);
  for (std::size_t l = 0; l < n_layers; ++l) {
    dh[l] = Vec::Zero(net.layers[l].hidden());
    dc[l] = Vec::Zero(net.layers[l].hidden());
  }

  for (Eigen::Index t = t_len - 1; t >= 0; --t) {
    const Vec dy = 2.0 / denom * (output.col(t) - target.col(t));
    grads.dense_w += dy * trace[n_layers - 1].h.col(t).transpose();
    grads.dense_b += dy;
    dh[n_layers - 1] += net.dense_w.transpose() * dy;

    for (std::size_t li = n_layers; li-- > 0;) {
      const auto& layer = net.layers[li];
      const int h = layer.hidden();
      const auto g = trace[li].gates.col(t);

      const Vec c_prev = t > 0 ? Vec(trace[li].c.col(t - 1)) : state0[li].c;
      const Vec h_prev = t > 0 ? Vec(trace[li].h.col(t - 1)) : state0[li].h;

      Vec dz(4 * h);
      Vec dc_prev(h);
      for (int i = 0; i < h; ++i) {
        const double f1 = g[i], f2 = g[h + i], f3 = g[2 * h + i], f4 = g[3 * h + i];
        const double th = trace[li].tanh_c(i, t);
        const double dht = dh[li][i];
        const double df4 = dht * th;
        const double dct = dc[li][i] + dht * f4 * (1.0 - th * th);
        const double df1 = dct * c_prev[i];
        const double df2 = dct * f3;
        const double df3 = dct * f2;
        dc_prev[i] = dct * f1;
        dz[i] = df1 * f1 * (1.0 - f1);
        dz[h + i] = df2 * f2 * (1.0 - f2);
        dz[2 * h + i] = df3 * (1.0 - f3 * f3);
        dz[3 * h + i] = df4 * f4 * (1.0 - f4);
      }

      const auto x_in = li == 0 ? Vec(input.col(t)) : Vec(trace[li - 1].h.col(t));
      grads.layers[li].w_in += dz * x_in.transpose();
      grads.layers[li].w_rec += dz * h_prev.transpose();
      grads.layers[li].bias += dz;

      dh[li] = layer.w_rec.transpose() * dz;
      dc[li] = dc_prev;
      if (li > 0) dh[li - 1] += layer.w_in.transpose() * dz;
    }
  }
  return loss;
}

NetGrads bptt_gradients(const LstmNetwork& net, const Eigen::Ref<const Mat>& input,
                        const Eigen::Ref<const Mat>& target, double* loss_out) {
  NetGrads g = NetGrads::zeros_like(net);
  NetState state = NetState::zeros(net);
  const double loss = bptt_gradients(net, input, target, state, g);
  if (loss_out != nullptr) *loss_out = loss;
  return g;
}

AdamOptimizer::AdamOptimizer(const LstmNetwork& net, double lr, double beta1, double beta2,
                             double eps)
    : lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps), m_(NetGrads::zeros_like(net)),
      v_(NetGrads::zeros_like(net)) {}

void AdamOptimizer::step(LstmNetwork& net, const NetGrads& grads) {
  ++t_;
  const double bc1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
  const double bc2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
  auto update = [&](auto& param, auto& m, auto& v, const auto& g) {
    m = beta1_ * m + (1.0 - beta1_) * g;
    v = (beta2_ * v).eval();
    v.array() += (1.0 - beta2_) * g.array().square();
    param.array() -= lr_ * (m.array() / bc1) / ((v.array() / bc2).sqrt() + eps_);
  };
  for (std::size_t l = 0; l < net.layers.size(); ++l) {
    update(net.layers[l].w_in, m_.layers[l].w_in, v_.layers[l].w_in, grads.layers[l].w_in);
    update(net.layers[l].w_rec, m_.layers[l].w_rec, v_.layers[l].w_rec, grads.layers[l].w_rec);
    update(net.layers[l].bias, m_.layers[l].bias, v_.layers[l].bias, grads.layers[l].bias);
  }
  update(net.dense_w, m_.dense_w, v_.dense_w, grads.dense_w);
  update(net.dense_b, m_.dense_b, v_.dense_b, grads.dense_b);
}

Mat record_inputs(const MotionRecord& rec, std::size_t start, std::size_t n) {
  if (start + n > rec.size()) throw std::invalid_argument("record too short for requested window");
  Mat x(6, static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = static_cast<Eigen::Index>(i);
    x(0, c) = rec.heave_m[start + i];
    x(1, c) = rec.roll_deg[start + i];
    x(2, c) = rec.pitch_deg[start + i];
    x(3, c) = rec.zeta_m[start + i];
    x(4, c) = rec.dzdx[start + i];
    x(5, c) = rec.dzdy[start + i];
  }
  return x;
}

Mat record_targets(const MotionRecord& rec, std::size_t start, std::size_t n) {
  if (start + n > rec.size()) throw std::invalid_argument("record too short for requested window");
  Mat y(3, static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = static_cast<Eigen::Index>(i);
    y(0, c) = rec.heave_m[start + i];
    y(1, c) = rec.roll_deg[start + i];
    y(2, c) = rec.pitch_deg[start + i];
  }
  return y;
}

Dataset build_dataset(std::span<const MotionRecord> lofi, std::span<const MotionRecord> hifi,
                      const TrainConfig& cfg, int n_train, int n_val, int n_test,
                      std::vector<std::string>* split_manifest) {
  cfg.validate();
  if (lofi.size() != hifi.size()) throw std::invalid_argument("lofi/hifi record count mismatch");
  const auto need = static_cast<std::size_t>(n_train + n_val + n_test);
  if (lofi.size() < need)
    throw std::invalid_argument("need " + std::to_string(need) + " record pairs, have " +
                                std::to_string(lofi.size()));

  const auto n_seq = static_cast<std::size_t>(cfg.sequence_steps);

  std::vector<std::size_t> order(lofi.size());
  std::iota(order.begin(), order.end(), 0);
  CounterRng rng = CounterRng::keyed(cfg.seed, kSplitStream);
  rng.shuffle(order);

  std::vector<Mat> raw_in(lofi.size()), raw_tg(lofi.size());
  for (std::size_t i = 0; i < lofi.size(); ++i) {
    const auto start = static_cast<std::size_t>(lofi[i].meta.ramp_samples);
    raw_in[i] = record_inputs(lofi[i], start, n_seq);
    raw_tg[i] = record_targets(hifi[i], start, n_seq);
  }

  std::vector<Mat> fit_in, fit_tg;
  for (int i = 0; i < n_train; ++i) {
    fit_in.push_back(raw_in[order[static_cast<std::size_t>(i)]]);
    fit_tg.push_back(raw_tg[order[static_cast<std::size_t>(i)]]);
  }

  Dataset ds;
  ds.standardizer = fit_standardizer(fit_in, fit_tg);

  auto push = [&](std::vector<SequenceSample>& dst, std::size_t idx, const char* tag) {
    SequenceSample s;
    s.inputs = ds.standardizer.apply_inputs(raw_in[idx]);
    s.targets = ds.standardizer.apply_targets(raw_tg[idx]);
    s.id = lofi[idx].meta.fidelity + "/" + std::to_string(lofi[idx].meta.seed.condition) + "/" +
           std::to_string(lofi[idx].meta.seed.realization);
    if (split_manifest != nullptr)
      split_manifest->push_back(std::string(tag) + "," + s.id);
    dst.push_back(std::move(s));
  };
  std::size_t pos = 0;
  for (int i = 0; i < n_train; ++i) push(ds.train, order[pos++], "train");
  for (int i = 0; i < n_val; ++i) push(ds.val, order[pos++], "val");
  for (int i = 0; i < n_test; ++i) push(ds.test, order[pos++], "test");
  return ds;
}

TrainResult train(LstmNetwork net, const Dataset& data, const TrainConfig& cfg) {
  cfg.validate();
  net.validate();
  if (data.train.empty()) throw std::invalid_argument("empty training set");

  AdamOptimizer adam(net, cfg.learning_rate, cfg.adam_beta1, cfg.adam_beta2, cfg.adam_eps);
  const int chunk = cfg.chunk_steps();
  std::vector<EpochLoss> history;
  std::vector<std::pair<double, double>> raw_history;

  std::vector<std::size_t> order(data.train.size());
  std::iota(order.begin(), order.end(), 0);

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    if (cfg.shuffle) {
      CounterRng rng = CounterRng::keyed(cfg.seed, kShuffleStream,
                                         static_cast<std::uint64_t>(epoch));
      rng.shuffle(order);
    }

    double epoch_loss = 0.0;
    std::size_t chunk_count = 0;

    for (std::size_t b0 = 0; b0 < order.size(); b0 += static_cast<std::size_t>(cfg.batch_size)) {
      const std::size_t b1 = std::min(order.size(), b0 + static_cast<std::size_t>(cfg.batch_size));
      std::vector<NetState> states(b1 - b0, NetState::zeros(net));
      for (int c = 0; c < cfg.resolution_factor; ++c) {
        NetGrads grads = NetGrads::zeros_like(net);
        double batch_loss = 0.0;
        for (std::size_t s = b0; s < b1; ++s) {
          const auto& seq = data.train[order[s]];
          const double loss = bptt_gradients(
              net, seq.inputs.middleCols(c * chunk, chunk),
              seq.targets.middleCols(c * chunk, chunk), states[s - b0], grads);
          batch_loss += loss;
        }
        const double inv = 1.0 / static_cast<double>(b1 - b0);
        grads.scale(inv);
        batch_loss *= inv;
        if (!(batch_loss < cfg.divergence_loss))
          throw TrainingDiverged("training diverged at epoch " + std::to_string(epoch) +
                                     " (chunk loss " + std::to_string(batch_loss) + ")",
                                 raw_history);
        const double gnorm = grads.global_norm();
        if (gnorm > cfg.clip_norm) grads.scale(cfg.clip_norm / gnorm);
        if (cfg.learning_rate > 0.0) adam.step(net, grads);
        epoch_loss += batch_loss;
        ++chunk_count;
      }
    }
    epoch_loss /= static_cast<double>(chunk_count);

    double val_loss = 0.0;
    for (const auto& seq : data.val) val_loss += mse(seq.targets, network_forward(net, seq.inputs));
    if (!data.val.empty()) val_loss /= static_cast<double>(data.val.size());

    history.push_back({epoch_loss, val_loss});
    raw_history.emplace_back(epoch_loss, val_loss);
  }
  return {std::move(net), std::move(history)};
}

MotionRecord correct(const LstmNetwork& net, const Standardizer& std_stats,
                     const MotionRecord& lofi) {
  std_stats.validate();
  const Mat x = std_stats.apply_inputs(record_inputs(lofi, 0, lofi.size()));
  const Mat y = std_stats.invert_targets(network_forward(net, x));

  MotionRecord out = lofi;  // time base, wave channels and metadata carried over
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto c = static_cast<Eigen::Index>(i);
    out.heave_m[i] = y(0, c);
    out.roll_deg[i] = y(1, c);
    out.pitch_deg[i] = y(2, c);
  }
  out.meta.fidelity = "lstm-corrected";
  return out;
}

}  // namespace seakeep
