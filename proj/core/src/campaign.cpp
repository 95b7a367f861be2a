#include "seakeep/campaign.hpp"

#include <cmath>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "seakeep/csv.hpp"
#include "seakeep/errors.hpp"
#include "seakeep/parallel.hpp"

namespace seakeep {

using nlohmann::json;

std::string heading_tag(double heading_deg) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "h%03d", static_cast<int>(std::lround(heading_deg)));
  return buf;
}

namespace {

std::string row_id(int cond_index, double heading_deg) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "c%03d_%s", cond_index, heading_tag(heading_deg).c_str());
  return buf;
}

json sea_json(const BimodalSeaState& sea) {
  return json{{"hs1_m", sea.primary.hs},        {"tp1_s", sea.primary.tp},
              {"dir1_deg", sea.primary.dir_deg}, {"hs2_m", sea.secondary.hs},
              {"tp2_s", sea.secondary.tp},       {"dir2_deg", sea.secondary.dir_deg}};
}

BimodalSeaState sea_from_json(const json& j) {
  BimodalSeaState sea;
  sea.primary.hs = j.at("hs1_m").get<double>();
  sea.primary.tp = j.at("tp1_s").get<double>();
  sea.primary.dir_deg = j.at("dir1_deg").get<double>();
  sea.secondary.hs = j.at("hs2_m").get<double>();
  sea.secondary.tp = j.at("tp2_s").get<double>();
  sea.secondary.dir_deg = j.at("dir2_deg").get<double>();
  return sea;
}

}  // namespace

Manifest gen_conditions(const RunConfig& cfg, const WeatherHistogram& weather) {
  if (weather.empty()) throw FormatError("cannot generate conditions from an empty histogram");
  Manifest m;
  m.config_hash = cfg.config_hash();
  m.master_seed = cfg.master_seed;

  const auto top = weather.top_conditions(cfg.conditions_k, &m.truncated);
  for (std::size_t ci = 0; ci < top.size(); ++ci) {
    const BimodalSeaState rep = top[ci].key.representative();
    for (double heading : cfg.headings) {
      ManifestRow row;
      row.cond_index = static_cast<int>(ci);
      row.heading_deg = heading;
      row.id = row_id(row.cond_index, heading);
      row.key = top[ci].key;
      row.observations = top[ci].count;
      row.sea_rel = rep;
      row.sea_rel.primary.dir_deg = heading;
      row.sea_rel.secondary.dir_deg = wrap360(heading + rep.secondary.dir_deg);
      m.rows.push_back(std::move(row));
    }
  }
  return m;
}

void Manifest::save(const std::filesystem::path& file) const {
  json j;
  j["schema"] = "seakeep-manifest/1";
  j["config_hash"] = config_hash;
  j["master_seed"] = master_seed;
  j["truncated"] = truncated;
  json rows_j = json::array();
  for (const auto& r : rows) {
    rows_j.push_back(json{{"id", r.id},
                          {"cond_index", r.cond_index},
                          {"heading_deg", r.heading_deg},
                          {"sea_rel", sea_json(r.sea_rel)},
                          {"observations", r.observations}});
  }
  j["rows"] = std::move(rows_j);
  write_file(file, j.dump(1) + "\n");
}

Manifest Manifest::load(const std::filesystem::path& file) {
  json j;
  try {
    j = json::parse(read_file(file));
  } catch (const json::exception& e) {
    throw FormatError("manifest parse error: " + std::string(e.what()));
  }
  if (j.value("schema", "") != "seakeep-manifest/1")
    throw FormatError("not a manifest file: " + file.string());
  Manifest m;
  m.config_hash = j.at("config_hash").get<std::string>();
  m.master_seed = j.at("master_seed").get<std::uint64_t>();
  m.truncated = j.value("truncated", false);
  for (const auto& r : j.at("rows")) {
    ManifestRow row;
    row.id = r.at("id").get<std::string>();
    row.cond_index = r.at("cond_index").get<int>();
    row.heading_deg = r.at("heading_deg").get<double>();
    row.sea_rel = sea_from_json(r.at("sea_rel"));
    row.observations = r.at("observations").get<std::uint64_t>();
    row.key = SeaConditionKey::of(row.sea_rel);
    m.rows.push_back(std::move(row));
  }
  return m;
}

std::filesystem::path record_path(const std::filesystem::path& records_dir,
                                  const std::string& row_id, int realization, Fidelity f) {
  return records_dir /
         (row_id + "_r" + std::to_string(realization) +
          (f == Fidelity::Lofi ? "_lofi.csv" : "_hifi.csv"));
}

CampaignOutcome run_simulations(const RunConfig& cfg, const Manifest& manifest,
                                const HydroModel& model, Fidelity fidelity,
                                const std::filesystem::path& records_dir, int jobs) {
  std::filesystem::create_directories(records_dir);
  const std::string hash = cfg.config_hash();
  if (manifest.config_hash != hash)
    throw FormatError("manifest was generated from a different configuration");

  struct Job {
    std::size_t row;
    int realization;
  };
  std::vector<Job> jobs_list;
  for (std::size_t r = 0; r < manifest.rows.size(); ++r)
    for (int k = 0; k < cfg.realizations; ++k) jobs_list.push_back({r, k});

  CampaignOutcome outcome;
  std::mutex mutex;

  parallel_for(jobs_list.size(), jobs, [&](std::size_t ji) {
    const auto& job = jobs_list[ji];
    const ManifestRow& row = manifest.rows[job.row];
    const RngKey seed{cfg.master_seed, static_cast<std::uint64_t>(job.row),
                      static_cast<std::uint64_t>(job.realization)};
    const auto path = record_path(records_dir, row.id, job.realization, fidelity);

    if (motion_record_valid(path, seed, hash)) {
      std::lock_guard<std::mutex> lock(mutex);
      ++outcome.skipped;
      return;
    }
    try {
      const auto field =
          build_bimodal_field(row.sea_rel, cfg.n_per_system, cfg.sim.ramp_s, seed, cfg.scheme);
      SimConfig sim_cfg = cfg.sim;
      sim_cfg.heading_deg = row.heading_deg;
      MotionRecord rec = fidelity == Fidelity::Lofi ? simulate_lofi(model, field, sim_cfg)
                                                    : simulate_hifi_ref(model, field, sim_cfg);
      rec.meta.sea = row.sea_rel;
      rec.meta.config_hash = hash;
      write_motion_csv(path, rec);
      std::lock_guard<std::mutex> lock(mutex);
      ++outcome.simulated;
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(mutex);
      ++outcome.failed;
      outcome.errors.push_back(row.id + " r" + std::to_string(job.realization) + ": " + e.what());
    }
  });
  return outcome;
}

HeadingRecords load_heading_records(const std::filesystem::path& records_dir,
                                    const Manifest& manifest, double heading_deg,
                                    int realizations) {
  HeadingRecords out;
  for (std::size_t r = 0; r < manifest.rows.size(); ++r) {
    const auto& row = manifest.rows[r];
    if (std::abs(row.heading_deg - heading_deg) > 1e-9) continue;
    for (int k = 0; k < realizations; ++k) {
      const auto lofi_path = record_path(records_dir, row.id, k, Fidelity::Lofi);
      const auto hifi_path = record_path(records_dir, row.id, k, Fidelity::HifiRef);
      if (!std::filesystem::exists(lofi_path) || !std::filesystem::exists(hifi_path))
        continue;  // not simulated yet
      auto lofi = import_motion_record(lofi_path);
      auto hifi = import_motion_record(hifi_path);
      if (lofi.meta.truncated || hifi.meta.truncated) continue;  // unusable for training
      out.lofi.push_back(std::move(lofi));
      out.hifi.push_back(std::move(hifi));
    }
  }
  return out;
}

TrainOutput train_heading(const RunConfig& cfg, const Manifest& manifest,
                          const std::filesystem::path& records_dir, double heading_deg) {
  const auto records = load_heading_records(records_dir, manifest, heading_deg,
                                            cfg.realizations);
  const auto need = static_cast<std::size_t>(cfg.split_train + cfg.split_val + cfg.split_test);
  if (records.lofi.size() < need)
    throw FormatError("heading " + std::to_string(heading_deg) + ": need " +
                      std::to_string(need) + " record pairs for the split, found " +
                      std::to_string(records.lofi.size()));

  TrainConfig tc = cfg.train;
  tc.seed = cfg.master_seed ^ fnv1a64_str(heading_tag(heading_deg));

  TrainOutput out;
  Dataset ds = build_dataset(records.lofi, records.hifi, tc, cfg.split_train, cfg.split_val,
                             cfg.split_test, &out.split_manifest);

  CounterRng net_rng = CounterRng::keyed(tc.seed, 7001);
  LstmNetwork net = LstmNetwork::create(6, tc.hidden, tc.n_layers, 3, net_rng);
  TrainResult res = train(std::move(net), ds, tc);

  out.checkpoint.net = std::move(res.net);
  out.checkpoint.standardizer = ds.standardizer;
  out.checkpoint.train_config = tc;
  out.checkpoint.heading_deg = heading_deg;
  out.checkpoint.config_hash = cfg.config_hash();
  out.checkpoint.master_seed = cfg.master_seed;
  out.history = std::move(res.history);
  return out;
}

void write_loss_csv(const std::filesystem::path& file, std::span<const EpochLoss> history,
                    const std::string& config_hash, std::uint64_t master_seed) {
  std::ostringstream out;
  out << "# config_hash=" << config_hash << " master_seed=" << master_seed << "\n";
  out << "epoch,train_mse,val_mse\n";
  for (std::size_t e = 0; e < history.size(); ++e)
    out << (e + 1) << ',' << fmt_g9(history[e].train_mse) << ',' << fmt_g9(history[e].val_mse)
        << '\n';
  write_file(file, out.str());
}

}  // namespace seakeep
