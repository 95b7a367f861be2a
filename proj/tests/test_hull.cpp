#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <stdexcept>

#include "seakeep/bonjean.hpp"
#include "seakeep/hull.hpp"

using namespace seakeep;

namespace {

HullParticulars box_particulars() {
  HullParticulars p;
  p.lwl_m = 100.0;
  p.beam_m = 20.0;
  p.draft_m = 5.0;
  p.kg_m = 2.5;
  p.lcg_m = 50.0;
  return p;
}

HullParticulars table1_particulars() {
  HullParticulars p;
  p.lwl_m = 142.0;
  p.beam_m = 19.06;
  p.draft_m = 6.51;
  p.disp_t = 9156.38;
  p.kg_m = 7.71;
  p.lcg_m = 72.1;
  return p;
}

}  // namespace

TEST_CASE("box displacement is rho L B T") {
  auto h = generate_hull(HullKind::Box, box_particulars());
  CHECK(h.particulars.disp_t == doctest::Approx(10250.0).epsilon(1e-12));
  CHECK(h.displaced_volume(5.0) == doctest::Approx(100.0 * 20.0 * 5.0).epsilon(1e-9));
}

TEST_CASE("frigate-parametric hits the published displacement") {
  auto h = generate_hull(HullKind::FrigateParametric, table1_particulars());
  const double vol = h.displaced_volume(6.51);
  const double disp_t = vol * 1025.0 / 1000.0;
  CHECK(std::abs(disp_t - 9156.38) / 9156.38 < 0.02);
  // the bisection should land much closer than the 2% contract
  CHECK(std::abs(disp_t - 9156.38) / 9156.38 < 1e-3);
  // beam is respected at the midship waterline (within z-grid interpolation)
  const auto& mid = h.stations[h.stations.size() / 2];
  CHECK(mid.halfbeam_at(6.51) == doctest::Approx(19.06 / 2.0).epsilon(2e-3));
}

TEST_CASE("degenerate and infeasible hull parameters") {
  auto p = box_particulars();
  p.beam_m = 0.0;
  CHECK_THROWS_AS(generate_hull(HullKind::Box, p), std::invalid_argument);

  auto q = box_particulars();
  q.disp_t = 20000.0;  // > rho L B T = 10250 t
  CHECK_THROWS_AS(generate_hull(HullKind::Box, q), std::invalid_argument);
}

TEST_CASE("bonjean tables for the box") {
  auto h = generate_hull(HullKind::Box, box_particulars());
  auto t = BonjeanTable::build(h, 101);

  SUBCASE("full-draft section area and centroid") {
    for (int s = 0; s < t.station_count(); ++s) {
      auto sec = t.section(s, 5.0);
      CHECK(sec.area == doctest::Approx(100.0).epsilon(1e-12));
      CHECK(sec.centroid_z == doctest::Approx(2.5).epsilon(1e-12));
    }
  }

  SUBCASE("dry at the keel") {
    auto sec = t.section(5, 0.0);
    CHECK(sec.area == 0.0);
    auto below = t.section(5, -2.0);
    CHECK(below.area == 0.0);
    CHECK(below.centroid_z == 0.0);
  }

  SUBCASE("area is linear in z for a wall-sided section") {
    for (double z = 0.1; z < 9.9; z += 0.37) {
      auto sec = t.section(7, z);
      CHECK(std::abs(sec.area - 20.0 * z) < 1e-12 * 200.0);
    }
  }

  SUBCASE("saturates above the table top") {
    auto at_top = t.section(3, 10.0);
    auto above = t.section(3, 14.0);
    CHECK(above.area == doctest::Approx(at_top.area + 20.0 * 4.0));
    CHECK(above.halfbeam == at_top.halfbeam);
  }

  SUBCASE("unknown station") {
    CHECK_THROWS_AS(t.section(99, 1.0), std::out_of_range);
  }

  SUBCASE("half-draft rectangle arithmetic") {
    auto sec = t.section(0, 2.5);
    CHECK(sec.area == doctest::Approx(50.0).epsilon(1e-12));
    CHECK(sec.centroid_z == doctest::Approx(1.25).epsilon(1e-12));
  }

  SUBCASE("waterplane area") {
    CHECK(t.waterplane_area(5.0) == doctest::Approx(2000.0).epsilon(1e-9));
  }
}

TEST_CASE("build_bonjean rejects n_z < 2") {
  auto h = generate_hull(HullKind::Box, box_particulars());
  CHECK_THROWS_AS(BonjeanTable::build(h, 1), std::invalid_argument);
}

TEST_CASE("bonjean area monotone in z for the frigate") {
  auto h = generate_hull(HullKind::FrigateParametric, table1_particulars());
  auto t = BonjeanTable::build(h, 101);
  for (int s = 0; s < t.station_count(); ++s) {
    double prev = -1.0;
    for (double z = 0.0; z < 13.0; z += 0.25) {
      const double a = t.section(s, z).area;
      CHECK(a >= prev);
      prev = a;
    }
  }
}

TEST_CASE("offsets file round trip") {
  auto h = generate_hull(HullKind::FrigateParametric, table1_particulars(), 11, 21);
  const auto file = std::filesystem::temp_directory_path() / "seakeep_offsets_test.csv";
  write_offsets_csv(file, h);
  auto back = load_offsets_csv(file, h.particulars);
  REQUIRE(back.stations.size() == h.stations.size());
  for (std::size_t s = 0; s < h.stations.size(); ++s) {
    CHECK(back.stations[s].x == doctest::Approx(h.stations[s].x).epsilon(1e-9));
    REQUIRE(back.stations[s].z.size() == h.stations[s].z.size());
    for (std::size_t i = 0; i < h.stations[s].z.size(); ++i)
      CHECK(back.stations[s].halfbeam[i] ==
            doctest::Approx(h.stations[s].halfbeam[i]).epsilon(1e-7));
  }
  std::filesystem::remove(file);
}
