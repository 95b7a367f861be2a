#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <stdexcept>

#include "seakeep/csv.hpp"
#include "seakeep/errors.hpp"
#include "seakeep/weather.hpp"

using namespace seakeep;

namespace {

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

WeatherHistogram three_row_cell() {
  WeatherHistogram h;
  GridCell cell{280, 350};
  WeatherEntry a, b, c;
  a.sea.primary = {3.0, 6.5, 240.0};
  a.sea.secondary = {1.5, 11.5, 330.0};
  a.count = 5;
  b.sea.primary = {2.0, 7.0, 200.0};
  b.sea.secondary = {1.0, 12.0, 300.0};
  b.count = 3;
  c.sea.primary = {5.0, 9.0, 180.0};
  c.sea.secondary = {2.5, 13.0, 60.0};
  c.count = 1;
  h.add(cell, a);
  h.add(cell, b);
  h.add(cell, c);
  return h;
}

}  // namespace

TEST_CASE("empty file loads as an empty histogram; sampling from it fails") {
  const auto file = temp_file("seakeep_weather_empty.csv");
  write_file(file, "");
  auto h = WeatherHistogram::load_csv(file);
  CHECK(h.empty());
  CounterRng rng = CounterRng::keyed(1);
  CHECK_THROWS_AS(h.sample(GridCell{0, 0}, rng), FormatError);
  std::filesystem::remove(file);
}

TEST_CASE("three-row cell normalizes counts to 5/9, 3/9, 1/9") {
  auto h = three_row_cell();
  GridCell cell{280, 350};
  // empirical check of the proportional sampler
  int counts[3] = {0, 0, 0};
  CounterRng rng = CounterRng::keyed(12345);
  for (int i = 0; i < 9000; ++i) {
    auto sea = h.sample(cell, rng);
    if (sea.primary.hs == 3.0) ++counts[0];
    else if (sea.primary.hs == 2.0) ++counts[1];
    else ++counts[2];
  }
  CHECK(std::abs(counts[0] / 9000.0 - 5.0 / 9.0) < 0.02);
  CHECK(std::abs(counts[1] / 9000.0 - 3.0 / 9.0) < 0.02);
  CHECK(std::abs(counts[2] / 9000.0 - 1.0 / 9.0) < 0.02);
}

TEST_CASE("round trip export/import preserves the histogram") {
  auto h = three_row_cell();
  const auto file = temp_file("seakeep_weather_rt.csv");
  h.save_csv(file);
  auto back = WeatherHistogram::load_csv(file);
  CHECK(back.cell_count() == h.cell_count());
  const auto* entries = back.cell_entries(GridCell{280, 350});
  REQUIRE(entries != nullptr);
  REQUIRE(entries->size() == 3);
  CHECK((*entries)[0].sea.primary.hs == 3.0);
  CHECK((*entries)[0].count == 5);
  CHECK((*entries)[2].sea.secondary.tp == 13.0);
  std::filesystem::remove(file);
}

TEST_CASE("malformed rows are rejected with line numbers") {
  const auto file = temp_file("seakeep_weather_bad.csv");
  SUBCASE("wrong header") {
    write_file(file, "lat,lon,hs\n1,2,3\n");
    CHECK_THROWS_AS(WeatherHistogram::load_csv(file), FormatError);
  }
  SUBCASE("negative count names the line") {
    write_file(file,
               "lat_bin,lon_bin,hs1,tp1,dir1,hs2,tp2,dir2,count\n"
               "280,350,3.0,6.5,240,1.5,11.5,330,5\n"
               "280,350,2.0,7.0,200,1.0,12.0,300,-2\n");
    try {
      WeatherHistogram::load_csv(file);
      FAIL("expected FormatError");
    } catch (const FormatError& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  SUBCASE("non-numeric field names the column") {
    write_file(file,
               "lat_bin,lon_bin,hs1,tp1,dir1,hs2,tp2,dir2,count\n"
               "280,350,abc,6.5,240,1.5,11.5,330,5\n");
    try {
      WeatherHistogram::load_csv(file);
      FAIL("expected FormatError");
    } catch (const FormatError& e) {
      CHECK(std::string(e.what()).find("hs1") != std::string::npos);
    }
  }
  std::filesystem::remove(file);
}

TEST_CASE("top-k conditions") {
  auto h = three_row_cell();

  SUBCASE("descending by count") {
    auto top = h.top_conditions(2);
    REQUIRE(top.size() == 2);
    CHECK(top[0].count == 5);
    CHECK(top[1].count == 3);
  }

  SUBCASE("k beyond distinct combos returns all with a warning flag") {
    bool truncated = false;
    auto top = h.top_conditions(100, &truncated);
    CHECK(top.size() == 3);
    CHECK(truncated);
  }

  SUBCASE("ties break lexicographically and deterministically") {
    WeatherHistogram h2;
    GridCell cell{100, 100};
    WeatherEntry a, b;
    a.sea.primary = {4.0, 8.0, 0.0};
    a.sea.secondary = {1.0, 12.0, 90.0};
    a.count = 7;
    b.sea.primary = {2.0, 6.0, 0.0};
    b.sea.secondary = {1.0, 12.0, 90.0};
    b.count = 7;
    h2.add(cell, a);
    h2.add(cell, b);
    auto t1 = h2.top_conditions(2);
    auto t2 = h2.top_conditions(2);
    REQUIRE(t1.size() == 2);
    CHECK(t1[0].key.hs1 < t1[1].key.hs1);  // smaller hs1 bin first on ties
    CHECK(t1[0].key == t2[0].key);
  }
}

TEST_CASE("single-entry cell always returns that entry") {
  WeatherHistogram h;
  GridCell cell{10, 20};
  WeatherEntry e;
  e.sea.primary = {3.5, 8.0, 120.0};
  e.sea.secondary = {1.0, 14.0, 30.0};
  e.count = 4;
  h.add(cell, e);
  CounterRng rng = CounterRng::keyed(9);
  for (int i = 0; i < 20; ++i) {
    auto sea = h.sample(cell, rng);
    CHECK(sea.primary.hs == 3.5);
    CHECK(sea.secondary.dir_deg == 30.0);
  }
}

TEST_CASE("absent cell falls back to the basin aggregate with a flag") {
  auto h = three_row_cell();
  CounterRng rng = CounterRng::keyed(3);
  bool fallback = false;
  auto sea = h.sample(GridCell{5, 5}, rng, &fallback);
  CHECK(fallback);
  CHECK(sea.primary.hs > 0.0);
}

TEST_CASE("missing secondary direction resolves to the most probable difference") {
  WeatherHistogram h;
  GridCell cell{50, 60};
  WeatherEntry known;
  known.sea.primary = {3.0, 7.0, 100.0};
  known.sea.secondary = {1.0, 12.0, 190.0};  // ddir 90 -> bin 3 (center 105)
  known.count = 10;
  WeatherEntry missing;
  missing.sea.primary = {4.0, 8.0, 200.0};
  missing.sea.secondary = {2.0, 13.0, std::nan("")};
  missing.count = 1;
  h.add(cell, known);
  h.add(cell, missing);

  CHECK(h.most_probable_ddir(cell) == doctest::Approx(105.0));
  CounterRng rng = CounterRng::keyed(2);
  for (int i = 0; i < 40; ++i) {
    auto sea = h.sample(cell, rng);
    if (sea.primary.hs == 4.0) {
      CHECK(sea.secondary.dir_deg == doctest::Approx(wrap360(200.0 + 105.0)));
      return;
    }
  }
  FAIL("never sampled the entry with the missing direction");
}

TEST_CASE("synthetic weather is deterministic and binned") {
  std::vector<GridCell> cells = {{280, 350}, {281, 351}, {282, 352}};
  auto a = synthesize_weather(cells, 42);
  auto b = synthesize_weather(cells, 42);
  CHECK(a.cell_count() == 3);
  const auto* ea = a.cell_entries(cells[0]);
  const auto* eb = b.cell_entries(cells[0]);
  REQUIRE(ea != nullptr);
  REQUIRE(eb != nullptr);
  REQUIRE(ea->size() == eb->size());
  for (std::size_t i = 0; i < ea->size(); ++i) {
    CHECK((*ea)[i].sea.primary.hs == (*eb)[i].sea.primary.hs);
    CHECK((*ea)[i].count == (*eb)[i].count);
    // parameters snapped to bin centers
    const double hs4 = (*ea)[i].sea.primary.hs / 0.25;
    CHECK(std::abs(hs4 - std::round(hs4)) < 1e-9);
  }
}
