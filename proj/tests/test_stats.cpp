#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "seakeep/errors.hpp"
#include "seakeep/stats.hpp"

using namespace seakeep;

namespace {

MotionRecord record_from(const std::vector<double>& roll, int ramp_samples = 0) {
  MotionRecord rec;
  rec.dt = 0.1;
  for (std::size_t i = 0; i < roll.size(); ++i) {
    rec.t.push_back(static_cast<double>(i) * 0.1);
    rec.heave_m.push_back(0.5 * roll[i]);
    rec.roll_deg.push_back(roll[i]);
    rec.pitch_deg.push_back(0.0);
    rec.zeta_m.push_back(0.0);
    rec.dzdx.push_back(0.0);
    rec.dzdy.push_back(0.0);
  }
  rec.meta.ramp_samples = ramp_samples;
  return rec;
}

}  // namespace

TEST_CASE("ensemble std") {
  SUBCASE("constant channel gives zero") {
    std::vector<MotionRecord> recs = {record_from(std::vector<double>(100, 2.5))};
    CHECK(ensemble_std(recs, Channel::Roll) == 0.0);
  }

  SUBCASE("sinusoid over integer periods gives 1/sqrt(2)") {
    std::vector<double> x(1200);
    for (std::size_t i = 0; i < x.size(); ++i)
      x[i] = std::sin(2.0 * kPi * 10.0 * static_cast<double>(i) / x.size());
    std::vector<MotionRecord> recs = {record_from(x)};
    CHECK(std::abs(ensemble_std(recs, Channel::Roll) - 1.0 / std::sqrt(2.0)) < 1e-3);
  }

  SUBCASE("scaling the channel scales the std exactly") {
    CounterRng rng = CounterRng::keyed(4);
    std::vector<double> x(500);
    for (auto& v : x) v = rng.normal();
    std::vector<double> x2(x);
    for (auto& v : x2) v *= 2.0;
    std::vector<MotionRecord> a = {record_from(x)};
    std::vector<MotionRecord> b = {record_from(x2)};
    CHECK(ensemble_std(b, Channel::Roll) == doctest::Approx(2.0 * ensemble_std(a, Channel::Roll))
                                                .epsilon(1e-15));
  }

  SUBCASE("ramp samples are excluded") {
    std::vector<double> x(200, 0.0);
    for (std::size_t i = 100; i < 200; ++i) x[i] = (i % 2 == 0) ? 1.0 : -1.0;
    std::vector<MotionRecord> with_ramp = {record_from(x, 100)};
    CHECK(ensemble_std(with_ramp, Channel::Roll) == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("mean over five realizations") {
    std::vector<MotionRecord> recs;
    for (int k = 1; k <= 5; ++k) {
      std::vector<double> x(400);
      CounterRng rng = CounterRng::keyed(static_cast<std::uint64_t>(k));
      for (auto& v : x) v = rng.normal() * k;
      recs.push_back(record_from(x));
    }
    double sum = 0.0;
    for (const auto& r : recs) sum += population_std(r.roll_deg);
    CHECK(ensemble_std(recs, Channel::Roll) == doctest::Approx(sum / 5.0).epsilon(1e-15));
  }

  SUBCASE("no realizations is an error") {
    std::vector<MotionRecord> none;
    CHECK_THROWS_AS(ensemble_std(none, Channel::Roll), std::invalid_argument);
  }
}

TEST_CASE("gaussian KDE") {
  SUBCASE("pdf integrates to one") {
    CounterRng rng = CounterRng::keyed(10);
    std::vector<double> samples(200);
    for (auto& v : samples) v = rng.normal() * 2.0 + 1.0;
    auto kde = gaussian_kde(samples);
    CHECK(std::abs(kde.integral() - 1.0) < 1e-6);
  }

  SUBCASE("two symmetric samples give a symmetric pdf") {
    std::vector<double> samples = {-1.0, 3.0};  // midpoint 1.0
    auto kde = gaussian_kde(samples, 257);
    const std::size_t n = kde.x.size();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(kde.pdf[i] == doctest::Approx(kde.pdf[n - 1 - i]).epsilon(1e-12));
      CHECK(kde.x[i] + kde.x[n - 1 - i] == doctest::Approx(2.0).epsilon(1e-12));
    }
  }

  SUBCASE("standard-normal samples peak near zero") {
    CounterRng rng = CounterRng::keyed(7);
    std::vector<double> samples(10000);
    for (auto& v : samples) v = rng.normal();
    auto kde = gaussian_kde(samples, 513);
    double best_x = 0.0, best_p = -1.0;
    for (std::size_t i = 0; i < kde.x.size(); ++i)
      if (kde.pdf[i] > best_p) {
        best_p = kde.pdf[i];
        best_x = kde.x[i];
      }
    CHECK(std::abs(best_x) < 0.05);
  }

  SUBCASE("identical samples are a degenerate-bandwidth error") {
    std::vector<double> samples(10, 3.14);
    CHECK_THROWS_AS(gaussian_kde(samples), NumericalError);
  }

  SUBCASE("fewer than two samples is invalid") {
    std::vector<double> one = {1.0};
    CHECK_THROWS_AS(gaussian_kde(one), std::invalid_argument);
  }
}

TEST_CASE("cross-correlation peak") {
  // b is a delayed copy of a: the peak lag must recover the delay
  const int n = 2000;
  const int delay = 25;
  std::vector<double> a(n), b(n);
  CounterRng rng = CounterRng::keyed(7);
  std::vector<double> base(n + delay);
  for (auto& v : base) v = rng.normal();
  // smooth to give the correlation a clear peak
  for (int i = 2; i < n + delay - 2; ++i)
    base[i] = 0.2 * (base[i - 2] + base[i - 1] + base[i] + base[i + 1] + base[i + 2]);
  for (int i = 0; i < n; ++i) {
    a[i] = base[i + delay];
    b[i] = base[i];
  }
  auto peak = xcorr_peak(a, b, 0.1, 5.0);
  CHECK(peak.lag_s == doctest::Approx(delay * 0.1));
  CHECK(peak.peak > 0.9);

  // identical signals: zero lag, unit peak
  auto self = xcorr_peak(a, a, 0.1, 5.0);
  CHECK(self.lag_s == 0.0);
  CHECK(self.peak == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("median") {
  CHECK(median_of({3.0, 1.0, 2.0}) == 2.0);
  CHECK(median_of({4.0, 1.0, 2.0, 3.0}) == 2.5);
  CHECK_THROWS_AS(median_of({}), std::invalid_argument);
}
