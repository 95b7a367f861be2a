#include "seakeep/motion.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "seakeep/csv.hpp"
#include "seakeep/errors.hpp"

namespace seakeep {

using nlohmann::json;

std::span<const double> MotionRecord::channel(Channel c) const {
  switch (c) {
    case Channel::Heave: return heave_m;
    case Channel::Roll: return roll_deg;
    case Channel::Pitch: return pitch_deg;
    case Channel::Zeta: return zeta_m;
    case Channel::DzDx: return dzdx;
    case Channel::DzDy: return dzdy;
  }
  return {};
}

void MotionRecord::validate() const {
  const std::size_t n = t.size();
  if (heave_m.size() != n || roll_deg.size() != n || pitch_deg.size() != n ||
      zeta_m.size() != n || dzdx.size() != n || dzdy.size() != n)
    throw FormatError("motion record channel lengths differ");
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs((t[i] - t[i - 1]) - dt) > 1e-6)
      throw FormatError("non-uniform time grid at sample " + std::to_string(i));
  }
}

namespace {

json sea_to_json(const BimodalSeaState& sea) {
  return json{{"primary", {{"hs_m", sea.primary.hs}, {"tp_s", sea.primary.tp},
                           {"dir_deg", sea.primary.dir_deg}}},
              {"secondary", {{"hs_m", sea.secondary.hs}, {"tp_s", sea.secondary.tp},
                             {"dir_deg", sea.secondary.dir_deg}}}};
}

BimodalSeaState sea_from_json(const json& j) {
  BimodalSeaState sea;
  sea.primary.hs = j.at("primary").at("hs_m").get<double>();
  sea.primary.tp = j.at("primary").at("tp_s").get<double>();
  sea.primary.dir_deg = j.at("primary").at("dir_deg").get<double>();
  sea.secondary.hs = j.at("secondary").at("hs_m").get<double>();
  sea.secondary.tp = j.at("secondary").at("tp_s").get<double>();
  sea.secondary.dir_deg = j.at("secondary").at("dir_deg").get<double>();
  return sea;
}

std::filesystem::path sidecar_path(const std::filesystem::path& file) {
  return std::filesystem::path(file.string() + ".meta.json");
}

std::string render_csv(const MotionRecord& rec) {
  std::ostringstream out;
  out << "t,heave_m,roll_deg,pitch_deg,zeta_m,dzdx,dzdy\n";
  for (std::size_t i = 0; i < rec.size(); ++i) {
    out << fmt_g9(rec.t[i]) << ',' << fmt_g9(rec.heave_m[i]) << ',' << fmt_g9(rec.roll_deg[i])
        << ',' << fmt_g9(rec.pitch_deg[i]) << ',' << fmt_g9(rec.zeta_m[i]) << ','
        << fmt_g9(rec.dzdx[i]) << ',' << fmt_g9(rec.dzdy[i]) << '\n';
  }
  return out.str();
}

}  // namespace

void write_motion_csv(const std::filesystem::path& file, const MotionRecord& rec) {
  rec.validate();
  const std::string body = render_csv(rec);
  write_file(file, body);

  json meta;
  meta["schema"] = "seakeep-motion/1";
  meta["dt_s"] = rec.dt;
  meta["samples"] = rec.size();
  meta["sea"] = sea_to_json(rec.meta.sea);
  meta["heading_deg"] = rec.meta.heading_deg;
  meta["speed_kts"] = rec.meta.speed_kts;
  meta["seed"] = {{"master", rec.meta.seed.master},
                  {"condition", rec.meta.seed.condition},
                  {"realization", rec.meta.seed.realization}};
  meta["fidelity"] = rec.meta.fidelity;
  meta["hull_id"] = rec.meta.hull_id;
  meta["ramp_samples"] = rec.meta.ramp_samples;
  meta["truncated"] = rec.meta.truncated;
  meta["config_hash"] = rec.meta.config_hash;
  char csum[32];
  std::snprintf(csum, sizeof csum, "%016llx",
                static_cast<unsigned long long>(fnv1a64(body.data(), body.size())));
  meta["checksum_fnv1a64"] = csum;
  write_file(sidecar_path(file), meta.dump(2) + "\n");
}

MotionRecord import_motion_record(const std::filesystem::path& file) {
  const CsvTable table = read_csv(file);
  const std::vector<std::string> want = {"t",      "heave_m", "roll_deg", "pitch_deg",
                                         "zeta_m", "dzdx",    "dzdy"};
  for (const auto& col : want)
    if (table.column(col) < 0) throw FormatError("missing column '" + col + "' in " + file.string());
  if (table.header.size() != want.size())
    throw FormatError("unexpected extra columns in " + file.string());

  MotionRecord rec;
  const std::size_t n = table.rows.size();
  rec.t.reserve(n);
  auto col = [&](const char* name) { return table.column(name); };
  const int ci[7] = {col("t"),      col("heave_m"), col("roll_deg"), col("pitch_deg"),
                     col("zeta_m"), col("dzdx"),    col("dzdy")};
  int line = 1;
  for (const auto& row : table.rows) {
    ++line;
    if (row.size() != want.size())
      throw FormatError("line " + std::to_string(line) + ": expected 7 fields");
    rec.t.push_back(parse_double_field(row[static_cast<std::size_t>(ci[0])], line, "t"));
    rec.heave_m.push_back(parse_double_field(row[static_cast<std::size_t>(ci[1])], line, "heave_m"));
    rec.roll_deg.push_back(
        parse_double_field(row[static_cast<std::size_t>(ci[2])], line, "roll_deg"));
    rec.pitch_deg.push_back(
        parse_double_field(row[static_cast<std::size_t>(ci[3])], line, "pitch_deg"));
    rec.zeta_m.push_back(parse_double_field(row[static_cast<std::size_t>(ci[4])], line, "zeta_m"));
    rec.dzdx.push_back(parse_double_field(row[static_cast<std::size_t>(ci[5])], line, "dzdx"));
    rec.dzdy.push_back(parse_double_field(row[static_cast<std::size_t>(ci[6])], line, "dzdy"));
  }
  if (rec.t.size() >= 2) rec.dt = rec.t[1] - rec.t[0];
  rec.meta.fidelity = "imported";

  const auto side = sidecar_path(file);
  if (std::filesystem::exists(side)) {
    const json meta = json::parse(read_file(side));
    rec.meta.sea = sea_from_json(meta.at("sea"));
    rec.meta.heading_deg = meta.at("heading_deg").get<double>();
    rec.meta.speed_kts = meta.at("speed_kts").get<double>();
    rec.meta.seed.master = meta.at("seed").at("master").get<std::uint64_t>();
    rec.meta.seed.condition = meta.at("seed").at("condition").get<std::uint64_t>();
    rec.meta.seed.realization = meta.at("seed").at("realization").get<std::uint64_t>();
    rec.meta.fidelity = meta.at("fidelity").get<std::string>();
    rec.meta.hull_id = meta.at("hull_id").get<std::string>();
    rec.meta.ramp_samples = meta.at("ramp_samples").get<int>();
    rec.meta.truncated = meta.at("truncated").get<bool>();
    rec.meta.config_hash = meta.value("config_hash", "");
    rec.dt = meta.at("dt_s").get<double>();
  }
  rec.validate();
  return rec;
}

bool motion_record_valid(const std::filesystem::path& file, const RngKey& seed,
                         const std::string& config_hash) {
  const auto side = sidecar_path(file);
  if (!std::filesystem::exists(file) || !std::filesystem::exists(side)) return false;
  try {
    const json meta = json::parse(read_file(side));
    if (meta.at("seed").at("master").get<std::uint64_t>() != seed.master) return false;
    if (meta.at("seed").at("condition").get<std::uint64_t>() != seed.condition) return false;
    if (meta.at("seed").at("realization").get<std::uint64_t>() != seed.realization) return false;
    if (meta.value("config_hash", "") != config_hash) return false;
    const std::string body = read_file(file);
    char csum[32];
    std::snprintf(csum, sizeof csum, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(body.data(), body.size())));
    return meta.at("checksum_fnv1a64").get<std::string>() == csum;
  } catch (...) {
    return false;
  }
}

}  // namespace seakeep
