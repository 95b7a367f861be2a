#include "seakeep/cli.hpp"

#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "seakeep/campaign.hpp"
#include "seakeep/csv.hpp"
#include "seakeep/errors.hpp"
#include "seakeep/voyage.hpp"

namespace seakeep {

namespace {

struct GlobalArgs {
  std::string config_file;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> profile;
  int jobs = 0;  // 0 = hardware concurrency
};

RunConfig load_config(const GlobalArgs& g) {
  if (g.config_file.empty()) {
    RunConfig cfg = RunConfig::defaults(g.profile.value_or("desk"));
    if (g.seed) cfg.master_seed = *g.seed;
    cfg.train.seed = cfg.master_seed;
    cfg.validate();
    return cfg;
  }
  return RunConfig::load(g.config_file, g.profile, g.seed);
}

HydroModel build_model(const RunConfig& cfg) {
  HydroModel model(generate_hull(cfg.hull_kind, cfg.hull));
  solve_static_equilibrium(model);
  return model;
}

std::map<double, Checkpoint> load_checkpoint_dir(const std::filesystem::path& dir,
                                                 const std::vector<double>& headings) {
  std::map<double, Checkpoint> out;
  for (double h : headings) {
    const auto file = dir / ("checkpoint_" + heading_tag(h) + ".json");
    if (std::filesystem::exists(file)) out[h] = load_checkpoint(file);
  }
  if (out.empty()) throw FormatError("no checkpoints found in " + dir.string());
  return out;
}

int cmd_gen_conditions(const GlobalArgs& g, const std::string& histogram_file,
                       const std::string& out_file) {
  const RunConfig cfg = load_config(g);
  const auto weather = WeatherHistogram::load_csv(histogram_file);
  const Manifest manifest = gen_conditions(cfg, weather);
  manifest.save(out_file);
  if (manifest.truncated)
    std::cerr << "warning: histogram has fewer than " << cfg.conditions_k
              << " distinct conditions; manifest holds all of them\n";
  std::cout << "wrote " << manifest.rows.size() << " manifest rows to " << out_file << "\n";
  return 0;
}

int cmd_simulate(const GlobalArgs& g, const std::string& manifest_file,
                 const std::string& fidelity, const std::string& records_dir,
                 int realizations_override) {
  RunConfig cfg = load_config(g);
  if (realizations_override > 0) cfg.realizations = realizations_override;
  const Manifest manifest = Manifest::load(manifest_file);
  const HydroModel model = build_model(cfg);

  std::vector<Fidelity> fids;
  if (fidelity == "lofi")
    fids = {Fidelity::Lofi};
  else if (fidelity == "hifi")
    fids = {Fidelity::HifiRef};
  else if (fidelity == "both")
    fids = {Fidelity::Lofi, Fidelity::HifiRef};
  else
    throw CLI::ValidationError("--fidelity must be lofi, hifi or both");

  bool any_failed = false;
  for (Fidelity f : fids) {
    const auto outcome = run_simulations(cfg, manifest, model, f, records_dir, g.jobs);
    std::cout << (f == Fidelity::Lofi ? "lofi" : "hifi") << ": " << outcome.simulated
              << " simulated, " << outcome.skipped << " skipped, " << outcome.failed
              << " failed\n";
    for (const auto& e : outcome.errors) std::cerr << "  " << e << "\n";
    any_failed |= outcome.failed > 0;
  }
  if (any_failed) throw NumericalError("one or more simulations failed");
  return 0;
}

int cmd_train(const GlobalArgs& g, const std::string& manifest_file,
              const std::string& records_dir, const std::string& heading_arg,
              const std::string& out_dir) {
  const RunConfig cfg = load_config(g);
  const Manifest manifest = Manifest::load(manifest_file);
  std::filesystem::create_directories(out_dir);

  std::vector<double> headings;
  if (heading_arg == "all")
    headings = cfg.headings;
  else
    headings.push_back(std::stod(heading_arg));

  for (double h : headings) {
    const TrainOutput out = train_heading(cfg, manifest, records_dir, h);
    const std::string tag = heading_tag(h);
    save_checkpoint(std::filesystem::path(out_dir) / ("checkpoint_" + tag + ".json"),
                    out.checkpoint);
    write_loss_csv(std::filesystem::path(out_dir) / ("loss_" + tag + ".csv"), out.history,
                   cfg.config_hash(), cfg.master_seed);
    std::string split = "# config_hash=" + cfg.config_hash() + " master_seed=" +
                        std::to_string(cfg.master_seed) + "\nsplit,record\n";
    for (const auto& line : out.split_manifest) split += line + "\n";
    write_file(std::filesystem::path(out_dir) / ("split_" + tag + ".csv"), split);
    std::cout << "heading " << h << ": final train mse " << out.history.back().train_mse
              << ", val mse " << out.history.back().val_mse << "\n";
  }
  return 0;
}

int cmd_correct(const GlobalArgs&, const std::string& checkpoint_file,
                const std::string& input_file, const std::string& out_file) {
  const Checkpoint ck = load_checkpoint(checkpoint_file);
  const MotionRecord rec = import_motion_record(input_file);
  const MotionRecord corrected = correct(ck.net, ck.standardizer, rec);
  write_motion_csv(out_file, corrected);
  std::cout << "wrote " << out_file << "\n";
  return 0;
}

int cmd_voyage(const GlobalArgs& g, const std::string& histogram_file,
               const std::string& checkpoints_dir, const std::string& out_dir,
               const std::vector<double>& start, const std::vector<double>& end) {
  const RunConfig cfg = load_config(g);
  const auto weather = WeatherHistogram::load_csv(histogram_file);
  const HydroModel model = build_model(cfg);
  const auto checkpoints = load_checkpoint_dir(checkpoints_dir, cfg.headings);

  LatLon a = cfg.voyage_start, b = cfg.voyage_end;
  if (start.size() == 2) a = {start[0], start[1]};
  if (end.size() == 2) b = {end[0], end[1]};

  const auto route = great_circle_route(a, b);
  std::vector<double> heads;
  for (const auto& [h, ck] : checkpoints) heads.push_back(h);
  const auto plan = build_voyage_plan(route, weather, cfg.sim.speed_kts, cfg.master_seed,
                                      cfg.voyage_stride, heads);

  VoyageRunConfig vrc;
  vrc.sim = cfg.sim;
  vrc.n_per_system = cfg.n_per_system;
  vrc.scheme = cfg.scheme;
  vrc.realizations = cfg.voyage_realizations;
  vrc.jobs = g.jobs;
  const auto result = run_voyage(model, plan, checkpoints, vrc);
  write_voyage_files(out_dir, result, cfg.config_hash());
  std::cout << "evaluated " << plan.legs.size() << " waypoints over "
            << result.plan.route.arc_length_m / 1000.0 << " km; artifacts in " << out_dir
            << "\n";
  return 0;
}

int cmd_report(const GlobalArgs&, const std::string& voyage_dir, const std::string& out_dir) {
  // re-aggregate comparison artifacts from a stored voyage summary
  using nlohmann::json;
  const auto summary_file = std::filesystem::path(voyage_dir) / "voyage_summary.json";
  json j;
  try {
    j = json::parse(read_file(summary_file));
  } catch (const std::exception& e) {
    throw FormatError("cannot read voyage summary: " + std::string(e.what()));
  }
  if (j.value("schema", "") != "seakeep-voyage/1")
    throw FormatError("not a voyage summary: " + summary_file.string());

  StatsMap lofi, corrected, reference;
  std::map<std::string, BimodalSeaState> seas;
  for (const auto& leg : j.at("legs")) {
    const std::string id = leg.at("id").get<std::string>();
    auto stats = [&](const char* fid) {
      const auto& s = leg.at("std").at(fid);
      return FidelityStats{s.at("heave_m").get<double>(), s.at("roll_deg").get<double>(),
                           s.at("pitch_deg").get<double>()};
    };
    lofi[id] = stats("lofi");
    corrected[id] = stats("corrected");
    reference[id] = stats("reference");
    const auto& sea = leg.at("sea_abs");
    BimodalSeaState b;
    b.primary.hs = sea.at("hs1_m").get<double>();
    b.primary.tp = sea.at("tp1_s").get<double>();
    b.primary.dir_deg = sea.at("dir1_deg").get<double>();
    b.secondary.hs = sea.at("hs2_m").get<double>();
    b.secondary.tp = sea.at("tp2_s").get<double>();
    b.secondary.dir_deg = sea.at("dir2_deg").get<double>();
    seas[id] = b;
  }
  const auto report = compare_report(lofi, corrected, reference, seas);
  write_report_files(out_dir, report, j.value("config_hash", ""),
                     j.value("master_seed", std::uint64_t{0}));
  std::cout << "report artifacts in " << out_dir << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Multi-fidelity ship-motion pipeline: bimodal seaways, 3-DOF volume-method "
               "simulation, LSTM correction and voyage statistics"};
  app.require_subcommand(1);

  GlobalArgs g;
  std::uint64_t seed_val = 0;
  std::string profile_val;
  app.add_option("--config", g.config_file, "Run-configuration JSON file");
  auto* seed_opt = app.add_option("--seed", seed_val, "Master seed (overrides config)");
  auto* prof_opt = app.add_option("--profile", profile_val, "canonical or desk")
                       ->check(CLI::IsMember({"canonical", "desk"}));
  app.add_option("--jobs", g.jobs, "Worker threads (0 = hardware concurrency)");

  // gen-conditions
  auto* gen = app.add_subcommand("gen-conditions", "Build the (condition x heading) manifest");
  std::string gen_hist, gen_out = "manifest.json";
  gen->add_option("--histogram", gen_hist, "Weather histogram CSV")->required();
  gen->add_option("--out", gen_out, "Manifest output path");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Run the simulation campaign (resumable)");
  std::string sim_manifest, sim_fidelity = "both", sim_records = "records";
  int sim_realizations = 0;
  sim->add_option("--manifest", sim_manifest, "Manifest JSON")->required();
  sim->add_option("--fidelity", sim_fidelity, "lofi | hifi | both");
  sim->add_option("--records", sim_records, "Record store directory");
  sim->add_option("--realizations", sim_realizations, "Override realization count");

  // train
  auto* trn = app.add_subcommand("train", "Train the corrector network(s)");
  std::string trn_manifest, trn_records = "records", trn_heading = "all", trn_out = "checkpoints";
  trn->add_option("--manifest", trn_manifest, "Manifest JSON")->required();
  trn->add_option("--records", trn_records, "Record store directory");
  trn->add_option("--heading", trn_heading, "Heading in degrees, or 'all'");
  trn->add_option("--out", trn_out, "Checkpoint output directory");

  // correct
  auto* cor = app.add_subcommand("correct", "Apply a trained corrector to a record");
  std::string cor_ck, cor_in, cor_out;
  cor->add_option("--checkpoint", cor_ck, "Checkpoint JSON")->required();
  cor->add_option("--input", cor_in, "Lo-fi record CSV")->required();
  cor->add_option("--out", cor_out, "Corrected record CSV")->required();

  // voyage
  auto* voy = app.add_subcommand("voyage", "Sample and evaluate a great-circle voyage");
  std::string voy_hist, voy_cks = "checkpoints", voy_out = "voyage";
  std::vector<double> voy_start, voy_end;
  voy->add_option("--histogram", voy_hist, "Weather histogram CSV")->required();
  voy->add_option("--checkpoints", voy_cks, "Checkpoint directory");
  voy->add_option("--out", voy_out, "Output directory");
  voy->add_option("--start", voy_start, "Start lat lon")->expected(2);
  voy->add_option("--end", voy_end, "End lat lon")->expected(2);

  // report
  auto* rep = app.add_subcommand("report", "Re-emit comparison artifacts from a voyage");
  std::string rep_voyage, rep_out = "report";
  rep->add_option("--voyage", rep_voyage, "Voyage output directory")->required();
  rep->add_option("--out", rep_out, "Report output directory");

  try {
    app.parse(argc, argv);
    if (*seed_opt) g.seed = seed_val;
    if (*prof_opt) g.profile = profile_val;

    if (gen->parsed()) return cmd_gen_conditions(g, gen_hist, gen_out);
    if (sim->parsed()) return cmd_simulate(g, sim_manifest, sim_fidelity, sim_records,
                                           sim_realizations);
    if (trn->parsed()) return cmd_train(g, trn_manifest, trn_records, trn_heading, trn_out);
    if (cor->parsed()) return cmd_correct(g, cor_ck, cor_in, cor_out);
    if (voy->parsed()) return cmd_voyage(g, voy_hist, voy_cks, voy_out, voy_start, voy_end);
    if (rep->parsed()) return cmd_report(g, rep_voyage, rep_out);
    return 1;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, returns 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const FormatError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace seakeep
