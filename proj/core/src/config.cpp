#include "seakeep/config.hpp"

#include <cmath>
#include <cstdio>
#include <set>

#include <json.hpp>

#include "seakeep/csv.hpp"
#include "seakeep/errors.hpp"

namespace seakeep {

using nlohmann::json;

RunConfig RunConfig::defaults(const std::string& profile) {
  RunConfig c;
  c.profile = profile;

  c.hull.lwl_m = 142.0;
  c.hull.beam_m = 19.06;
  c.hull.draft_m = 6.51;
  c.hull.disp_t = 9156.38;
  c.hull.kg_m = 7.71;
  c.hull.lcg_m = 72.1;

  c.sim.dt_integrate = 0.05;
  c.sim.dt_record = 0.1;
  c.sim.ramp_s = 120.0;
  c.sim.speed_kts = 10.0;

  if (profile == "canonical") {
    c.conditions_k = 100;
    c.headings.clear();
    for (int h = 0; h < 360; h += 30) c.headings.push_back(h);
    c.realizations = 5;
    c.split_train = 50;
    c.split_val = 25;
    c.split_test = 25;
    c.train.epochs = 100;
    c.train.sequence_steps = 18000;
    c.train.resolution_factor = 9;
    c.train.hidden = 150;
    c.train.n_layers = 3;
    c.voyage_stride = 1;
    c.voyage_realizations = 5;
  } else if (profile == "desk") {
    c.conditions_k = 12;
    c.headings = {60.0, 240.0, 330.0};
    c.realizations = 2;
    c.split_train = 10;
    c.split_val = 5;
    c.split_test = 5;
    c.train.epochs = 30;
    c.train.sequence_steps = 2000;
    c.train.resolution_factor = 2;
    c.train.hidden = 32;
    c.train.n_layers = 3;
    c.voyage_stride = 20;
    c.voyage_realizations = 2;
  } else {
    throw FormatError("unknown profile '" + profile + "' (use canonical or desk)");
  }
  // record length follows the sequence length: ramp + N samples
  c.sim.duration_s = c.sim.ramp_s + c.train.sequence_steps * c.sim.dt_record;
  return c;
}

void RunConfig::validate() const {
  if (profile != "canonical" && profile != "desk") throw FormatError("unknown profile");
  if (!(hull.lwl_m > 0) || !(hull.beam_m > 0) || !(hull.draft_m > 0))
    throw FormatError("hull dimensions must be positive");
  if (n_per_system < 1) throw FormatError("n_per_system must be >= 1");
  if (conditions_k < 1) throw FormatError("conditions_k must be >= 1");
  if (headings.empty()) throw FormatError("at least one heading required");
  for (double h : headings)
    if (h < 0.0 || h >= 360.0) throw FormatError("headings must lie in [0, 360)");
  if (realizations < 1 || voyage_realizations < 1) throw FormatError("realizations must be >= 1");
  if (split_train < 1 || split_val < 0 || split_test < 0) throw FormatError("bad split sizes");
  if (voyage_stride < 1) throw FormatError("voyage stride must be >= 1");
  sim.validate();
  train.validate();
  // training needs N post-ramp samples per record
  const double needed = sim.ramp_s + train.sequence_steps * sim.dt_record;
  if (sim.duration_s + 1e-9 < needed)
    throw FormatError("duration too short for sequence_steps after the ramp");
}

namespace {

void require_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, v] : j.items())
    if (!allowed.contains(key))
      throw FormatError("unknown key '" + key + "' in " + where);
}

}  // namespace

RunConfig RunConfig::load(const std::filesystem::path& file,
                          const std::optional<std::string>& profile_override,
                          const std::optional<std::uint64_t>& seed_override) {
  json j;
  try {
    j = json::parse(read_file(file));
  } catch (const json::exception& e) {
    throw FormatError("config parse error: " + std::string(e.what()));
  }
  require_keys(j, {"profile", "master_seed", "hull", "seaway", "sim", "campaign", "train",
                   "voyage", "paths"},
               "config");

  const std::string profile =
      profile_override.value_or(j.value("profile", std::string("desk")));
  RunConfig c = defaults(profile);
  c.master_seed = seed_override.value_or(j.value("master_seed", std::uint64_t{0}));

  if (j.contains("hull")) {
    const auto& h = j["hull"];
    require_keys(h, {"kind", "lwl_m", "beam_m", "draft_m", "disp_t", "kg_m", "lcg_m",
                     "kxx_frac", "kyy_frac"},
                 "hull");
    const std::string kind = h.value("kind", std::string("frigate-parametric"));
    if (kind == "box")
      c.hull_kind = HullKind::Box;
    else if (kind == "frigate-parametric")
      c.hull_kind = HullKind::FrigateParametric;
    else
      throw FormatError("hull.kind must be box or frigate-parametric");
    c.hull.lwl_m = h.value("lwl_m", c.hull.lwl_m);
    c.hull.beam_m = h.value("beam_m", c.hull.beam_m);
    c.hull.draft_m = h.value("draft_m", c.hull.draft_m);
    c.hull.disp_t = h.value("disp_t", c.hull.disp_t);
    c.hull.kg_m = h.value("kg_m", c.hull.kg_m);
    c.hull.lcg_m = h.value("lcg_m", c.hull.lcg_m);
    c.hull.kxx_frac = h.value("kxx_frac", c.hull.kxx_frac);
    c.hull.kyy_frac = h.value("kyy_frac", c.hull.kyy_frac);
  }
  if (j.contains("seaway")) {
    const auto& s = j["seaway"];
    require_keys(s, {"n_per_system", "scheme"}, "seaway");
    c.n_per_system = s.value("n_per_system", c.n_per_system);
    const std::string scheme = s.value("scheme", std::string("equal-energy"));
    if (scheme == "equal-energy")
      c.scheme = Discretization::EqualEnergy;
    else if (scheme == "equal-frequency")
      c.scheme = Discretization::EqualFrequency;
    else
      throw FormatError("seaway.scheme must be equal-energy or equal-frequency");
  }
  if (j.contains("sim")) {
    const auto& s = j["sim"];
    require_keys(s, {"dt_integrate", "dt_record", "duration_s", "ramp_s", "speed_kts", "coef"},
                 "sim");
    c.sim.dt_integrate = s.value("dt_integrate", c.sim.dt_integrate);
    c.sim.dt_record = s.value("dt_record", c.sim.dt_record);
    c.sim.duration_s = s.value("duration_s", c.sim.duration_s);
    c.sim.ramp_s = s.value("ramp_s", c.sim.ramp_s);
    c.sim.speed_kts = s.value("speed_kts", c.sim.speed_kts);
    if (s.contains("coef")) {
      const auto& k = s["coef"];
      require_keys(k, {"a33_frac", "a44_frac", "a55_frac", "b33_crit_frac", "b44_crit_frac",
                       "b55_crit_frac", "bq44", "roll_leak", "heave_leak", "pitch_leak",
                       "wander_amp_deg", "wander_period_s"},
                   "sim.coef");
      auto& co = c.sim.coef;
      co.a33_frac = k.value("a33_frac", co.a33_frac);
      co.a44_frac = k.value("a44_frac", co.a44_frac);
      co.a55_frac = k.value("a55_frac", co.a55_frac);
      co.b33_crit_frac = k.value("b33_crit_frac", co.b33_crit_frac);
      co.b44_crit_frac = k.value("b44_crit_frac", co.b44_crit_frac);
      co.b55_crit_frac = k.value("b55_crit_frac", co.b55_crit_frac);
      co.bq44 = k.value("bq44", co.bq44);
      co.roll_leak = k.value("roll_leak", co.roll_leak);
      co.heave_leak = k.value("heave_leak", co.heave_leak);
      co.pitch_leak = k.value("pitch_leak", co.pitch_leak);
      co.wander_amp_deg = k.value("wander_amp_deg", co.wander_amp_deg);
      co.wander_period_s = k.value("wander_period_s", co.wander_period_s);
    }
  }
  if (j.contains("campaign")) {
    const auto& s = j["campaign"];
    require_keys(s, {"conditions_k", "headings", "realizations", "split"}, "campaign");
    c.conditions_k = s.value("conditions_k", c.conditions_k);
    if (s.contains("headings")) c.headings = s["headings"].get<std::vector<double>>();
    c.realizations = s.value("realizations", c.realizations);
    if (s.contains("split")) {
      const auto split = s["split"].get<std::vector<int>>();
      if (split.size() != 3) throw FormatError("campaign.split must be [train, val, test]");
      c.split_train = split[0];
      c.split_val = split[1];
      c.split_test = split[2];
    }
  }
  if (j.contains("train")) {
    const auto& s = j["train"];
    require_keys(s, {"epochs", "sequence_steps", "resolution_factor", "hidden", "n_layers",
                     "learning_rate", "batch_size", "clip_norm", "shuffle"},
                 "train");
    c.train.epochs = s.value("epochs", c.train.epochs);
    const int old_steps = c.train.sequence_steps;
    c.train.sequence_steps = s.value("sequence_steps", c.train.sequence_steps);
    c.train.resolution_factor = s.value("resolution_factor", c.train.resolution_factor);
    c.train.hidden = s.value("hidden", c.train.hidden);
    c.train.n_layers = s.value("n_layers", c.train.n_layers);
    c.train.learning_rate = s.value("learning_rate", c.train.learning_rate);
    c.train.batch_size = s.value("batch_size", c.train.batch_size);
    c.train.clip_norm = s.value("clip_norm", c.train.clip_norm);
    c.train.shuffle = s.value("shuffle", c.train.shuffle);
    // keep the derived record length in step unless sim.duration_s was given
    if (c.train.sequence_steps != old_steps && !(j.contains("sim") && j["sim"].contains("duration_s")))
      c.sim.duration_s = c.sim.ramp_s + c.train.sequence_steps * c.sim.dt_record;
  }
  if (j.contains("voyage")) {
    const auto& s = j["voyage"];
    require_keys(s, {"start", "end", "stride", "realizations"}, "voyage");
    if (s.contains("start")) {
      const auto v = s["start"].get<std::vector<double>>();
      if (v.size() != 2) throw FormatError("voyage.start must be [lat, lon]");
      c.voyage_start = {v[0], v[1]};
    }
    if (s.contains("end")) {
      const auto v = s["end"].get<std::vector<double>>();
      if (v.size() != 2) throw FormatError("voyage.end must be [lat, lon]");
      c.voyage_end = {v[0], v[1]};
    }
    c.voyage_stride = s.value("stride", c.voyage_stride);
    c.voyage_realizations = s.value("realizations", c.voyage_realizations);
  }
  if (j.contains("paths")) {
    require_keys(j["paths"], {"out_dir"}, "paths");
    c.out_dir = j["paths"].value("out_dir", c.out_dir);
  }
  c.train.seed = c.master_seed;
  c.validate();
  return c;
}

std::string RunConfig::canonical_json() const {
  json j;
  j["profile"] = profile;
  j["master_seed"] = master_seed;
  j["hull"] = {{"kind", hull_kind == HullKind::Box ? "box" : "frigate-parametric"},
               {"lwl_m", hull.lwl_m},
               {"beam_m", hull.beam_m},
               {"draft_m", hull.draft_m},
               {"disp_t", hull.disp_t},
               {"kg_m", hull.kg_m},
               {"lcg_m", hull.lcg_m},
               {"kxx_frac", hull.kxx_frac},
               {"kyy_frac", hull.kyy_frac}};
  j["seaway"] = {{"n_per_system", n_per_system},
                 {"scheme", scheme == Discretization::EqualEnergy ? "equal-energy"
                                                                  : "equal-frequency"}};
  j["sim"] = {{"dt_integrate", sim.dt_integrate},
              {"dt_record", sim.dt_record},
              {"duration_s", sim.duration_s},
              {"ramp_s", sim.ramp_s},
              {"speed_kts", sim.speed_kts},
              {"coef",
               {{"a33_frac", sim.coef.a33_frac},
                {"a44_frac", sim.coef.a44_frac},
                {"a55_frac", sim.coef.a55_frac},
                {"b33_crit_frac", sim.coef.b33_crit_frac},
                {"b44_crit_frac", sim.coef.b44_crit_frac},
                {"b55_crit_frac", sim.coef.b55_crit_frac},
                {"bq44", sim.coef.bq44},
                {"roll_leak", sim.coef.roll_leak},
                {"heave_leak", sim.coef.heave_leak},
                {"pitch_leak", sim.coef.pitch_leak},
                {"wander_amp_deg", sim.coef.wander_amp_deg},
                {"wander_period_s", sim.coef.wander_period_s}}}};
  j["campaign"] = {{"conditions_k", conditions_k},
                   {"headings", headings},
                   {"realizations", realizations},
                   {"split", {split_train, split_val, split_test}}};
  j["train"] = {{"epochs", train.epochs},
                {"sequence_steps", train.sequence_steps},
                {"resolution_factor", train.resolution_factor},
                {"hidden", train.hidden},
                {"n_layers", train.n_layers},
                {"learning_rate", train.learning_rate},
                {"batch_size", train.batch_size},
                {"clip_norm", train.clip_norm},
                {"shuffle", train.shuffle}};
  j["voyage"] = {{"start", {voyage_start.lat_deg, voyage_start.lon_deg}},
                 {"end", {voyage_end.lat_deg, voyage_end.lon_deg}},
                 {"stride", voyage_stride},
                 {"realizations", voyage_realizations}};
  return j.dump();  // nlohmann objects iterate in sorted key order
}

std::string RunConfig::config_hash() const {
  const std::string canon = canonical_json();
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(canon.data(), canon.size())));
  return buf;
}

}  // namespace seakeep
