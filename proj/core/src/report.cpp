#include "seakeep/report.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "seakeep/csv.hpp"
#include "seakeep/errors.hpp"

namespace seakeep {

using nlohmann::json;

namespace {

double abs_pct_error(double value, double reference) {
  if (reference == 0.0) return value == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return 100.0 * std::abs(value - reference) / std::abs(reference);
}

json sea_json(const BimodalSeaState& sea) {
  return json{{"hs1_m", sea.primary.hs},      {"tp1_s", sea.primary.tp},
              {"dir1_deg", sea.primary.dir_deg}, {"hs2_m", sea.secondary.hs},
              {"tp2_s", sea.secondary.tp},    {"dir2_deg", sea.secondary.dir_deg}};
}

}  // namespace

CompareReport compare_report(const StatsMap& lofi, const StatsMap& corrected,
                             const StatsMap& reference,
                             const std::map<std::string, BimodalSeaState>& seas) {
  std::string missing;
  auto check_keys = [&](const StatsMap& m, const char* name) {
    for (const auto& [id, s] : reference)
      if (!m.contains(id)) missing += std::string(name) + " lacks " + id + "; ";
    for (const auto& [id, s] : m)
      if (!reference.contains(id)) missing += std::string(name) + " has extra " + id + "; ";
  };
  check_keys(lofi, "lofi");
  check_keys(corrected, "corrected");
  if (!missing.empty()) throw FormatError("condition sets misaligned: " + missing);

  CompareReport rep;
  double worst_hs = -1.0;
  for (const auto& [id, ref] : reference) {
    CompareRow row;
    row.id = id;
    row.sea = seas.contains(id) ? seas.at(id) : BimodalSeaState{};
    row.lofi = lofi.at(id);
    row.corrected = corrected.at(id);
    row.reference = ref;
    for (int d = 0; d < 3; ++d) {
      row.err_lofi[d] = abs_pct_error(row.lofi.dof(d), ref.dof(d));
      row.err_corrected[d] = abs_pct_error(row.corrected.dof(d), ref.dof(d));
    }
    const double hs_sum = row.sea.primary.hs + row.sea.secondary.hs;
    if (hs_sum > worst_hs) {
      worst_hs = hs_sum;
      rep.worst_id = id;
    }
    rep.rows.push_back(std::move(row));
  }

  for (int d = 0; d < 3; ++d) {
    std::vector<double> el, ec;
    for (const auto& row : rep.rows) {
      el.push_back(row.err_lofi[d]);
      ec.push_back(row.err_corrected[d]);
    }
    rep.median_err_lofi[d] = median_of(el);
    rep.median_err_corrected[d] = median_of(ec);
  }

  if (rep.rows.size() >= 2) {
    for (int d = 0; d < 3; ++d) {
      std::vector<double> sl, sc, sr;
      for (const auto& row : rep.rows) {
        sl.push_back(row.lofi.dof(d));
        sc.push_back(row.corrected.dof(d));
        sr.push_back(row.reference.dof(d));
      }
      try {
        KdeResult kl = gaussian_kde(sl);
        KdeResult kc = gaussian_kde(sc);
        KdeResult kr = gaussian_kde(sr);
        rep.kde[d] = {std::move(kl), std::move(kc), std::move(kr)};
      } catch (const NumericalError&) {
        rep.kde[d].clear();  // degenerate spread: no density summary for this DOF
      }
    }
  }
  return rep;
}

void write_report_files(const std::filesystem::path& dir, const CompareReport& rep,
                        const std::string& config_hash, std::uint64_t master_seed) {
  std::filesystem::create_directories(dir);
  static const char* kDof[3] = {"heave", "roll", "pitch"};

  json j;
  j["schema"] = "seakeep-report/1";
  j["config_hash"] = config_hash;
  j["master_seed"] = master_seed;
  j["worst_condition"] = rep.worst_id;
  for (int d = 0; d < 3; ++d) {
    j["median_abs_pct_error"][kDof[d]] = {{"lofi", rep.median_err_lofi[d]},
                                          {"corrected", rep.median_err_corrected[d]}};
  }
  json rows = json::array();
  for (const auto& row : rep.rows) {
    json r;
    r["id"] = row.id;
    r["sea"] = sea_json(row.sea);
    for (int d = 0; d < 3; ++d) {
      r["std"][kDof[d]] = {{"lofi", row.lofi.dof(d)},
                           {"corrected", row.corrected.dof(d)},
                           {"reference", row.reference.dof(d)}};
      r["abs_pct_error"][kDof[d]] = {{"lofi", row.err_lofi[d]},
                                     {"corrected", row.err_corrected[d]}};
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  write_file(dir / "report.json", j.dump(1) + "\n");

  std::ostringstream table;
  table << "# config_hash=" << config_hash << " master_seed=" << master_seed << "\n";
  table << "id,dof,std_lofi,std_corrected,std_reference,err_lofi_pct,err_corrected_pct\n";
  for (const auto& row : rep.rows)
    for (int d = 0; d < 3; ++d)
      table << row.id << ',' << kDof[d] << ',' << fmt_g9(row.lofi.dof(d)) << ','
            << fmt_g9(row.corrected.dof(d)) << ',' << fmt_g9(row.reference.dof(d)) << ','
            << fmt_g9(row.err_lofi[d]) << ',' << fmt_g9(row.err_corrected[d]) << '\n';
  write_file(dir / "error_table.csv", table.str());

  for (int d = 0; d < 3; ++d) {
    if (rep.kde[d].empty()) continue;
    std::ostringstream out;
    out << "# config_hash=" << config_hash << " master_seed=" << master_seed << "\n";
    out << "x_lofi,pdf_lofi,x_corrected,pdf_corrected,x_reference,pdf_reference\n";
    const auto& k = rep.kde[d];
    for (std::size_t i = 0; i < k[0].x.size(); ++i) {
      out << fmt_g9(k[0].x[i]) << ',' << fmt_g9(k[0].pdf[i]) << ',' << fmt_g9(k[1].x[i]) << ','
          << fmt_g9(k[1].pdf[i]) << ',' << fmt_g9(k[2].x[i]) << ',' << fmt_g9(k[2].pdf[i])
          << '\n';
    }
    write_file(dir / (std::string("kde_") + kDof[d] + ".csv"), out.str());
  }
}

}  // namespace seakeep
