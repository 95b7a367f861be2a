#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "seakeep/geo.hpp"
#include "seakeep/rng.hpp"

using namespace seakeep;

namespace {
const LatLon kNorfolk{36.85, -76.29};
const LatLon kBergen{60.39, 5.32};
}  // namespace

TEST_CASE("grid cells cover the globe at half-degree pitch") {
  auto c = GridCell::of({36.85, -76.29});
  CHECK(c.lat_bin == 253);
  CHECK(c.lon_bin == 207);
  auto center = c.center();
  CHECK(center.lat_deg == doctest::Approx(36.75));
  CHECK(center.lon_deg == doctest::Approx(-76.25));
  // poles and the date line stay in range
  CHECK(GridCell::of({90.0, 179.99}).lat_bin == 359);
  CHECK(GridCell::of({-90.0, -180.0}).lat_bin == 0);
  CHECK(GridCell::of({0.0, 180.0}).lon_bin == 0);  // wraps
}

TEST_CASE("degenerate route: start equals end") {
  auto route = great_circle_route(kNorfolk, kNorfolk);
  REQUIRE(route.waypoints.size() == 1);
  CHECK(route.arc_length_m == 0.0);
  CHECK(route.waypoints[0].cell == GridCell::of(kNorfolk));
}

TEST_CASE("antipodal endpoints are rejected") {
  CHECK_THROWS_AS(great_circle_route({10.0, 20.0}, {-10.0, -160.0}), std::invalid_argument);
}

TEST_CASE("Norfolk to Bergen matches the haversine oracle") {
  auto route = great_circle_route(kNorfolk, kBergen);
  const double oracle =
      oracles::haversine(kNorfolk.lat_deg, kNorfolk.lon_deg, kBergen.lat_deg, kBergen.lon_deg);
  CHECK(std::abs(route.arc_length_m - oracle) / oracle < 0.005);
  CHECK(route.waypoints.size() > 100);  // plenty of half-degree cells on ~6000 km
}

TEST_CASE("waypoints sit at odd multiples of a quarter degree") {
  auto route = great_circle_route(kNorfolk, kBergen);
  for (const auto& w : route.waypoints) {
    const double lat4 = w.center.lat_deg / 0.25;
    const double lon4 = w.center.lon_deg / 0.25;
    CHECK(std::abs(lat4 - std::round(lat4)) < 1e-9);
    CHECK(std::abs(lon4 - std::round(lon4)) < 1e-9);
    CHECK(static_cast<long long>(std::llround(lat4)) % 2 != 0);
    CHECK(static_cast<long long>(std::llround(lon4)) % 2 != 0);
  }
}

TEST_CASE("route monotonicity and snapped-length bound") {
  auto route = great_circle_route(kNorfolk, kBergen);
  for (std::size_t i = 1; i < route.waypoints.size(); ++i)
    CHECK(route.waypoints[i].arc_m > route.waypoints[i - 1].arc_m);
  CHECK(route.snapped_length_m >= route.arc_length_m * 0.999);
  // consecutive cells touch (share an edge or corner)
  for (std::size_t i = 1; i < route.waypoints.size(); ++i) {
    CHECK(std::abs(route.waypoints[i].cell.lat_bin - route.waypoints[i - 1].cell.lat_bin) <= 1);
    CHECK(std::abs(route.waypoints[i].cell.lon_bin - route.waypoints[i - 1].cell.lon_bin) <= 1);
  }
}

TEST_CASE("leg courses head toward the destination") {
  auto route = great_circle_route(kNorfolk, kBergen);
  CHECK(route.waypoints.front().course_deg > 0.0);
  CHECK(route.waypoints.front().course_deg < 90.0);
  for (const auto& w : route.waypoints) {
    CHECK(w.course_deg >= 0.0);
    CHECK(w.course_deg < 360.0);
  }
}

TEST_CASE("haversine agrees with the independent oracle") {
  CounterRng rng = CounterRng::keyed(88);
  for (int i = 0; i < 50; ++i) {
    LatLon a{rng.uniform(-80.0, 80.0), rng.uniform(-179.0, 179.0)};
    LatLon b{rng.uniform(-80.0, 80.0), rng.uniform(-179.0, 179.0)};
    const double got = haversine_m(a, b);
    const double want = oracles::haversine(a.lat_deg, a.lon_deg, b.lat_deg, b.lon_deg);
    CHECK(got == doctest::Approx(want).epsilon(1e-12));
  }
}
