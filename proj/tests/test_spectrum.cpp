#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "seakeep/spectrum.hpp"

using namespace seakeep;

TEST_CASE("spectral density at the modal frequency") {
  SpectrumParams p{3.0, 6.5, 0.0};
  const double wm = 2.0 * kPi / 6.5;
  // closed-form at omega_m: (45/16) e^{-5/4} / omega_m
  const double expect = (45.0 / 16.0) * std::exp(-1.25) / wm;
  CHECK(spectrum_density(p, wm) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(spectrum_density(p, wm) == doctest::Approx(0.8336).epsilon(2e-4));
}

TEST_CASE("zero-energy spectrum is identically zero") {
  SpectrumParams p{0.0, 8.0, 0.0};
  CHECK(spectrum_density(p, 0.3) == 0.0);
  CHECK(spectrum_density(p, 3.0) == 0.0);
}

TEST_CASE("density limits and domain errors") {
  SpectrumParams p{3.0, 6.5, 0.0};
  CHECK(spectrum_density(p, 1e-4) < 1e-200);
  CHECK(spectrum_density(p, 50.0) < 1e-3);
  CHECK_THROWS_AS(spectrum_density(p, 0.0), std::domain_error);
  CHECK_THROWS_AS(spectrum_density(p, -1.0), std::domain_error);
  SpectrumParams bad{3.0, 0.0, 0.0};
  CHECK_THROWS_AS(spectrum_density(bad, 1.0), std::domain_error);
}

TEST_CASE("quadrature of the density recovers hs^2/16") {
  SpectrumParams p{3.0, 6.5, 0.0};
  const double m0 = oracles::integrate([&](double w) { return w > 0 ? spectrum_density(p, w) : 0.0; },
                                       1e-9, 20.0);
  CHECK(m0 == doctest::Approx(0.5625).epsilon(5e-4));
}

TEST_CASE("moment identity holds across the tp range") {
  CounterRng rng = CounterRng::keyed(7);
  for (int i = 0; i < 12; ++i) {
    SpectrumParams p;
    p.hs = rng.uniform(0.5, 9.0);
    p.tp = rng.uniform(4.0, 16.0);
    const double m0 = oracles::integrate(
        [&](double w) { return w > 0 ? spectrum_density(p, w) : 0.0; }, 1e-9, 20.0);
    CHECK(std::abs(m0 - p.m0()) / p.m0() < 5e-3);
  }
}

TEST_CASE("single equal-energy component carries all the energy") {
  CounterRng rng = CounterRng::keyed(1);
  SpectrumParams p{3.0, 6.5, 0.0};
  auto comps = discretize_spectrum(p, 1, Discretization::EqualEnergy, rng);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].amplitude == doctest::Approx(1.0606601717798212).epsilon(1e-12));
}

TEST_CASE("zero hs discretizes to an empty list") {
  CounterRng rng = CounterRng::keyed(1);
  SpectrumParams p{0.0, 6.5, 0.0};
  CHECK(discretize_spectrum(p, 50, Discretization::EqualEnergy, rng).empty());
  CHECK(discretize_spectrum(p, 0, Discretization::EqualEnergy, rng).empty());
}

TEST_CASE("n = 0 with energy is invalid") {
  CounterRng rng = CounterRng::keyed(1);
  SpectrumParams p{3.0, 6.5, 0.0};
  CHECK_THROWS_AS(discretize_spectrum(p, 0, Discretization::EqualEnergy, rng),
                  std::invalid_argument);
}

TEST_CASE("equal-energy amplitudes sum exactly to m0") {
  CounterRng rng = CounterRng::keyed(42);
  SpectrumParams p{3.0, 6.5, 0.0};
  auto comps = discretize_spectrum(p, 200, Discretization::EqualEnergy, rng);
  REQUIRE(comps.size() == 200);
  double sum = 0.0;
  for (const auto& c : comps) sum += 0.5 * c.amplitude * c.amplitude;
  CHECK(std::abs(sum - 0.5625) < 1e-10);
}

TEST_CASE("equal-frequency amplitudes recover m0 within quadrature error") {
  CounterRng rng = CounterRng::keyed(42);
  SpectrumParams p{4.0, 9.0, 0.0};
  auto comps = discretize_spectrum(p, 400, Discretization::EqualFrequency, rng);
  double sum = 0.0;
  for (const auto& c : comps) sum += 0.5 * c.amplitude * c.amplitude;
  CHECK(sum == doctest::Approx(p.m0()).epsilon(5e-3));
}

TEST_CASE("component invariants: dispersion, heading, phases") {
  CounterRng rng = CounterRng::keyed(9);
  SpectrumParams p{2.5, 7.5, 135.0};
  auto comps = discretize_spectrum(p, 100, Discretization::EqualEnergy, rng);
  for (const auto& c : comps) {
    CHECK(c.omega > 0.0);
    CHECK(std::abs(c.k - c.omega * c.omega / kGravity) <= 1e-12 * c.k);
    CHECK(c.heading == doctest::Approx(wave_heading_rad(135.0)));
    CHECK(c.phase >= 0.0);
    CHECK(c.phase < 2.0 * kPi);
  }
  // frequencies ascend with the energy bands
  for (std::size_t i = 1; i < comps.size(); ++i) CHECK(comps[i].omega > comps[i - 1].omega);
}

TEST_CASE("parameter validation") {
  const SpectrumParams neg_hs{-1.0, 6.0, 0.0};
  const SpectrumParams neg_tp{1.0, -6.0, 0.0};
  const SpectrumParams bad_dir{1.0, 6.0, 360.0};
  const SpectrumParams ok{0.0, 6.0, 359.5};
  CHECK_THROWS_AS(neg_hs.validate(), std::domain_error);
  CHECK_THROWS_AS(neg_tp.validate(), std::domain_error);
  CHECK_THROWS_AS(bad_dir.validate(), std::domain_error);
  CHECK_NOTHROW(ok.validate());
}
