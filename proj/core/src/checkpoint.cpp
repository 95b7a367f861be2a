#include "seakeep/checkpoint.hpp"

#include <json.hpp>

#include "seakeep/csv.hpp"
#include "seakeep/errors.hpp"

namespace seakeep {

using nlohmann::json;

namespace {

constexpr int kVersion = 1;

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const json& j, Eigen::Index rows, Eigen::Index cols, const char* what) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows)
    throw FormatError(std::string("checkpoint: bad row count for ") + what);
  Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw FormatError(std::string("checkpoint: bad column count for ") + what);
    for (Eigen::Index jj = 0; jj < cols; ++jj)
      m(i, jj) = row[static_cast<std::size_t>(jj)].get<double>();
  }
  return m;
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Vec vec_from_json(const json& j, Eigen::Index n, const char* what) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != n)
    throw FormatError(std::string("checkpoint: bad length for ") + what);
  Vec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = j[static_cast<std::size_t>(i)].get<double>();
  return v;
}

}  // namespace

void save_checkpoint(const std::filesystem::path& file, const Checkpoint& ck) {
  ck.net.validate();
  json j;
  j["schema"] = "seakeep-checkpoint";
  j["version"] = kVersion;
  j["input_width"] = ck.net.input_width();
  j["hidden"] = ck.net.hidden_width();
  j["n_layers"] = ck.net.layers.size();
  j["output_width"] = ck.net.output_width();
  j["heading_deg"] = ck.heading_deg;
  j["config_hash"] = ck.config_hash;
  j["master_seed"] = ck.master_seed;

  json layers = json::array();
  for (const auto& l : ck.net.layers) {
    layers.push_back(json{{"w_in", mat_to_json(l.w_in)},
                          {"w_rec", mat_to_json(l.w_rec)},
                          {"bias", vec_to_json(l.bias)}});
  }
  j["layers"] = std::move(layers);
  j["dense_w"] = mat_to_json(ck.net.dense_w);
  j["dense_b"] = vec_to_json(ck.net.dense_b);

  j["standardizer"] = {{"mean_in", vec_to_json(ck.standardizer.mean_in)},
                       {"std_in", vec_to_json(ck.standardizer.std_in)},
                       {"mean_out", vec_to_json(ck.standardizer.mean_out)},
                       {"std_out", vec_to_json(ck.standardizer.std_out)}};

  const auto& t = ck.train_config;
  j["train"] = {{"epochs", t.epochs},
                {"sequence_steps", t.sequence_steps},
                {"resolution_factor", t.resolution_factor},
                {"hidden", t.hidden},
                {"n_layers", t.n_layers},
                {"learning_rate", t.learning_rate},
                {"adam_beta1", t.adam_beta1},
                {"adam_beta2", t.adam_beta2},
                {"adam_eps", t.adam_eps},
                {"clip_norm", t.clip_norm},
                {"batch_size", t.batch_size},
                {"shuffle", t.shuffle},
                {"seed", t.seed}};

  write_file(file, j.dump(1) + "\n");
}

Checkpoint load_checkpoint(const std::filesystem::path& file) {
  json j;
  try {
    j = json::parse(read_file(file));
  } catch (const json::exception& e) {
    throw FormatError("checkpoint parse error: " + std::string(e.what()));
  }
  if (j.value("schema", "") != "seakeep-checkpoint")
    throw FormatError("not a checkpoint file: " + file.string());
  if (j.value("version", -1) != kVersion)
    throw FormatError("unsupported checkpoint version in " + file.string());

  Checkpoint ck;
  const int input = j.at("input_width").get<int>();
  const int hidden = j.at("hidden").get<int>();
  const auto n_layers = j.at("n_layers").get<std::size_t>();
  const int output = j.at("output_width").get<int>();
  ck.heading_deg = j.at("heading_deg").get<double>();
  ck.config_hash = j.value("config_hash", "");
  ck.master_seed = j.value("master_seed", std::uint64_t{0});

  if (j.at("layers").size() != n_layers) throw FormatError("checkpoint: layer count mismatch");
  for (std::size_t l = 0; l < n_layers; ++l) {
    const int in_w = l == 0 ? input : hidden;
    const auto& jl = j.at("layers")[l];
    LstmLayer layer;
    layer.w_in = mat_from_json(jl.at("w_in"), 4 * hidden, in_w, "w_in");
    layer.w_rec = mat_from_json(jl.at("w_rec"), 4 * hidden, hidden, "w_rec");
    layer.bias = vec_from_json(jl.at("bias"), 4 * hidden, "bias");
    ck.net.layers.push_back(std::move(layer));
  }
  ck.net.dense_w = mat_from_json(j.at("dense_w"), output, hidden, "dense_w");
  ck.net.dense_b = vec_from_json(j.at("dense_b"), output, "dense_b");
  ck.net.validate();

  const auto& js = j.at("standardizer");
  const auto n_in = static_cast<Eigen::Index>(js.at("mean_in").size());
  const auto n_out = static_cast<Eigen::Index>(js.at("mean_out").size());
  ck.standardizer.mean_in = vec_from_json(js.at("mean_in"), n_in, "mean_in");
  ck.standardizer.std_in = vec_from_json(js.at("std_in"), n_in, "std_in");
  ck.standardizer.mean_out = vec_from_json(js.at("mean_out"), n_out, "mean_out");
  ck.standardizer.std_out = vec_from_json(js.at("std_out"), n_out, "std_out");
  ck.standardizer.validate();

  const auto& jt = j.at("train");
  ck.train_config.epochs = jt.at("epochs").get<int>();
  ck.train_config.sequence_steps = jt.at("sequence_steps").get<int>();
  ck.train_config.resolution_factor = jt.at("resolution_factor").get<int>();
  ck.train_config.hidden = jt.at("hidden").get<int>();
  ck.train_config.n_layers = jt.at("n_layers").get<int>();
  ck.train_config.learning_rate = jt.at("learning_rate").get<double>();
  ck.train_config.adam_beta1 = jt.at("adam_beta1").get<double>();
  ck.train_config.adam_beta2 = jt.at("adam_beta2").get<double>();
  ck.train_config.adam_eps = jt.at("adam_eps").get<double>();
  ck.train_config.clip_norm = jt.at("clip_norm").get<double>();
  ck.train_config.batch_size = jt.at("batch_size").get<int>();
  ck.train_config.shuffle = jt.at("shuffle").get<bool>();
  ck.train_config.seed = jt.at("seed").get<std::uint64_t>();
  return ck;
}

}  // namespace seakeep
