#include "seakeep/voyage.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "seakeep/csv.hpp"
#include "seakeep/errors.hpp"
#include "seakeep/parallel.hpp"
#include "seakeep/train.hpp"

namespace seakeep {

using nlohmann::json;

namespace {

// voyage wave streams live in their own condition-id block so they can never
// collide with campaign streams under the same master seed
constexpr std::uint64_t kVoyageConditionBase = 1ULL << 32;
constexpr std::uint64_t kSampleStream = 301;

double circular_distance_deg(double a, double b) { return std::abs(wrap180(a - b)); }

std::string leg_id(std::size_t route_index) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "wp%03zu", route_index);
  return buf;
}

}  // namespace

VoyagePlan build_voyage_plan(const GreatCircleRoute& route, const WeatherHistogram& weather,
                             double speed_kts, std::uint64_t master_seed, int stride,
                             std::span<const double> available_headings) {
  if (stride < 1) throw std::invalid_argument("voyage stride must be >= 1");
  if (!(speed_kts > 0.0)) throw std::invalid_argument("voyage speed must be positive");
  if (available_headings.empty()) throw std::invalid_argument("no network headings available");

  VoyagePlan plan;
  plan.route = route;
  plan.speed_kts = speed_kts;
  plan.master_seed = master_seed;

  for (std::size_t i = 0; i < route.waypoints.size(); i += static_cast<std::size_t>(stride)) {
    const Waypoint& wp = route.waypoints[i];
    CounterRng rng = CounterRng::keyed(master_seed, kSampleStream, i);
    VoyageLeg leg;
    leg.id = leg_id(i);
    leg.wp = wp;
    leg.sea_abs = weather.sample(wp.cell, rng, &leg.basin_fallback);

    leg.sea_rel = leg.sea_abs;
    leg.sea_rel.primary.dir_deg = wrap360(leg.sea_abs.primary.dir_deg - wp.course_deg);
    leg.sea_rel.secondary.dir_deg = wrap360(leg.sea_abs.secondary.dir_deg - wp.course_deg);

    double best = available_headings[0];
    for (double h : available_headings)
      if (circular_distance_deg(h, leg.sea_rel.primary.dir_deg) <
          circular_distance_deg(best, leg.sea_rel.primary.dir_deg))
        best = h;
    leg.matched_heading_deg = best;
    plan.legs.push_back(std::move(leg));
  }
  return plan;
}

VoyageResult run_voyage(const HydroModel& model, const VoyagePlan& plan,
                        const std::map<double, Checkpoint>& checkpoints,
                        const VoyageRunConfig& cfg) {
  if (!model.has_equilibrium()) throw EquilibriumError("solve equilibrium before the voyage");
  for (const auto& leg : plan.legs) {
    if (!checkpoints.contains(leg.matched_heading_deg))
      throw FormatError("no checkpoint for heading " +
                        std::to_string(leg.matched_heading_deg) + " deg (leg " + leg.id + ")");
  }

  VoyageResult result;
  result.plan = plan;
  result.stats.resize(plan.legs.size());

  auto simulate_leg = [&](const VoyageLeg& leg, std::uint64_t realization,
                          MotionRecord* lofi_out, MotionRecord* corr_out,
                          MotionRecord* ref_out) {
    const std::size_t route_index = static_cast<std::size_t>(
        std::stoul(leg.id.substr(2)));
    RngKey key{plan.master_seed, kVoyageConditionBase + route_index, realization};
    const auto field =
        build_bimodal_field(leg.sea_rel, cfg.n_per_system, cfg.sim.ramp_s, key, cfg.scheme);
    SimConfig sim_cfg = cfg.sim;
    sim_cfg.speed_kts = plan.speed_kts;
    sim_cfg.heading_deg = leg.sea_rel.primary.dir_deg;

    MotionRecord lofi = simulate_lofi(model, field, sim_cfg);
    MotionRecord ref = simulate_hifi_ref(model, field, sim_cfg);
    lofi.meta.sea = leg.sea_rel;
    ref.meta.sea = leg.sea_rel;
    const Checkpoint& ck = checkpoints.at(leg.matched_heading_deg);
    MotionRecord corr = correct(ck.net, ck.standardizer, lofi);
    if (lofi_out != nullptr) *lofi_out = std::move(lofi);
    if (corr_out != nullptr) *corr_out = std::move(corr);
    if (ref_out != nullptr) *ref_out = std::move(ref);
  };

  parallel_for(plan.legs.size(), cfg.jobs, [&](std::size_t li) {
    const VoyageLeg& leg = plan.legs[li];
    std::vector<MotionRecord> lofi(static_cast<std::size_t>(cfg.realizations));
    std::vector<MotionRecord> corr(static_cast<std::size_t>(cfg.realizations));
    std::vector<MotionRecord> ref(static_cast<std::size_t>(cfg.realizations));
    for (int r = 0; r < cfg.realizations; ++r) {
      simulate_leg(leg, static_cast<std::uint64_t>(r), &lofi[static_cast<std::size_t>(r)],
                   &corr[static_cast<std::size_t>(r)], &ref[static_cast<std::size_t>(r)]);
    }
    WaypointStats ws;
    ws.id = leg.id;
    for (const auto& rec : lofi) ws.truncated |= rec.meta.truncated;
    for (const auto& rec : ref) ws.truncated |= rec.meta.truncated;
    ws.lofi = {ensemble_std(lofi, Channel::Heave), ensemble_std(lofi, Channel::Roll),
               ensemble_std(lofi, Channel::Pitch)};
    ws.corrected = {ensemble_std(corr, Channel::Heave), ensemble_std(corr, Channel::Roll),
                    ensemble_std(corr, Channel::Pitch)};
    ws.reference = {ensemble_std(ref, Channel::Heave), ensemble_std(ref, Channel::Roll),
                    ensemble_std(ref, Channel::Pitch)};
    result.stats[li] = std::move(ws);
  });

  StatsMap lofi_map, corr_map, ref_map;
  std::map<std::string, BimodalSeaState> seas;
  for (std::size_t li = 0; li < plan.legs.size(); ++li) {
    lofi_map[plan.legs[li].id] = result.stats[li].lofi;
    corr_map[plan.legs[li].id] = result.stats[li].corrected;
    ref_map[plan.legs[li].id] = result.stats[li].reference;
    seas[plan.legs[li].id] = plan.legs[li].sea_abs;
  }
  result.report = compare_report(lofi_map, corr_map, ref_map, seas);

  for (std::size_t li = 0; li < plan.legs.size(); ++li)
    if (plan.legs[li].id == result.report.worst_id) result.worst_index = li;

  // regenerate the worst-condition triplet (first realization) for the
  // time-series comparison artifacts
  simulate_leg(plan.legs[result.worst_index], 0, &result.worst_lofi, &result.worst_corrected,
               &result.worst_reference);
  return result;
}

void write_voyage_files(const std::filesystem::path& dir, const VoyageResult& result,
                        const std::string& config_hash) {
  std::filesystem::create_directories(dir);

  json j;
  j["schema"] = "seakeep-voyage/1";
  j["config_hash"] = config_hash;
  j["master_seed"] = result.plan.master_seed;
  j["speed_kts"] = result.plan.speed_kts;
  j["route"] = {{"arc_length_m", result.plan.route.arc_length_m},
                {"snapped_length_m", result.plan.route.snapped_length_m},
                {"cells_crossed", result.plan.route.waypoints.size()},
                {"legs_evaluated", result.plan.legs.size()}};
  j["worst_condition"] = result.report.worst_id;

  json legs = json::array();
  for (std::size_t li = 0; li < result.plan.legs.size(); ++li) {
    const auto& leg = result.plan.legs[li];
    const auto& ws = result.stats[li];
    json l;
    l["id"] = leg.id;
    l["cell"] = {{"lat_bin", leg.wp.cell.lat_bin}, {"lon_bin", leg.wp.cell.lon_bin}};
    l["lat_deg"] = leg.wp.center.lat_deg;
    l["lon_deg"] = leg.wp.center.lon_deg;
    l["course_deg"] = leg.wp.course_deg;
    l["arc_m"] = leg.wp.arc_m;
    l["sea_abs"] = {{"hs1_m", leg.sea_abs.primary.hs},
                    {"tp1_s", leg.sea_abs.primary.tp},
                    {"dir1_deg", leg.sea_abs.primary.dir_deg},
                    {"hs2_m", leg.sea_abs.secondary.hs},
                    {"tp2_s", leg.sea_abs.secondary.tp},
                    {"dir2_deg", leg.sea_abs.secondary.dir_deg}};
    l["rel_primary_heading_deg"] = leg.sea_rel.primary.dir_deg;
    l["matched_heading_deg"] = leg.matched_heading_deg;
    l["basin_fallback"] = leg.basin_fallback;
    l["truncated"] = ws.truncated;
    l["std"] = {{"lofi", {{"heave_m", ws.lofi.heave},
                          {"roll_deg", ws.lofi.roll},
                          {"pitch_deg", ws.lofi.pitch}}},
                {"corrected", {{"heave_m", ws.corrected.heave},
                               {"roll_deg", ws.corrected.roll},
                               {"pitch_deg", ws.corrected.pitch}}},
                {"reference", {{"heave_m", ws.reference.heave},
                               {"roll_deg", ws.reference.roll},
                               {"pitch_deg", ws.reference.pitch}}}};
    legs.push_back(std::move(l));
  }
  j["legs"] = std::move(legs);
  write_file(dir / "voyage_summary.json", j.dump(1) + "\n");

  write_report_files(dir, result.report, config_hash, result.plan.master_seed);

  auto stamped = [&](MotionRecord rec) {
    rec.meta.config_hash = config_hash;
    return rec;
  };
  write_motion_csv(dir / "worst_lofi.csv", stamped(result.worst_lofi));
  write_motion_csv(dir / "worst_corrected.csv", stamped(result.worst_corrected));
  write_motion_csv(dir / "worst_reference.csv", stamped(result.worst_reference));
}

}  // namespace seakeep
