#include "seakeep/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "seakeep/errors.hpp"

namespace seakeep {

double mean_of(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return x.empty() ? 0.0 : s / static_cast<double>(x.size());
}

double population_std(std::span<const double> x) {
  const double m = mean_of(x);
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  return x.empty() ? 0.0 : std::sqrt(s / static_cast<double>(x.size()));
}

double median_of(std::vector<double> x) {
  if (x.empty()) throw std::invalid_argument("median of an empty set");
  const std::size_t mid = x.size() / 2;
  std::nth_element(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(mid), x.end());
  if (x.size() % 2 == 1) return x[mid];
  const double hi = x[mid];
  std::nth_element(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(mid) - 1, x.end());
  return 0.5 * (x[mid - 1] + hi);
}

double ensemble_std(std::span<const MotionRecord> realizations, Channel channel) {
  if (realizations.empty()) throw std::invalid_argument("ensemble_std needs >= 1 realization");
  double acc = 0.0;
  for (const auto& rec : realizations) {
    const auto full = rec.channel(channel);
    const auto skip = std::min<std::size_t>(static_cast<std::size_t>(rec.meta.ramp_samples),
                                            full.size());
    acc += population_std(full.subspan(skip));
  }
  return acc / static_cast<double>(realizations.size());
}

double KdeResult::integral() const {
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i)
    s += 0.5 * (pdf[i] + pdf[i - 1]) * (x[i] - x[i - 1]);
  return s;
}

KdeResult gaussian_kde(std::span<const double> samples, int grid_points) {
  if (samples.size() < 2) throw std::invalid_argument("KDE needs at least 2 samples");
  if (grid_points < 8) throw std::invalid_argument("KDE grid too small");

  const double n = static_cast<double>(samples.size());
  const double sigma = population_std(samples);

  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto q = [&](double f) {
    const double pos = f * (n - 1.0);
    const auto i = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(i);
    return i + 1 < sorted.size() ? sorted[i] + frac * (sorted[i + 1] - sorted[i]) : sorted[i];
  };
  const double iqr = q(0.75) - q(0.25);

  double spread = sigma;
  if (iqr > 0.0) spread = std::min(spread, iqr / 1.34);
  const double bw = 0.9 * spread * std::pow(n, -0.2);
  if (!(bw > 0.0)) throw NumericalError("KDE bandwidth degenerate: identical samples");

  KdeResult out;
  out.bandwidth = bw;
  const double lo = sorted.front() - 3.0 * bw;
  const double hi = sorted.back() + 3.0 * bw;
  out.x.resize(static_cast<std::size_t>(grid_points));
  out.pdf.assign(static_cast<std::size_t>(grid_points), 0.0);
  const double norm = 1.0 / (n * bw * std::sqrt(2.0 * kPi));
  for (int i = 0; i < grid_points; ++i) {
    const double xg = lo + (hi - lo) * i / (grid_points - 1);
    out.x[static_cast<std::size_t>(i)] = xg;
    double p = 0.0;
    for (double s : samples) {
      const double u = (xg - s) / bw;
      p += std::exp(-0.5 * u * u);
    }
    out.pdf[static_cast<std::size_t>(i)] = p * norm;
  }
  // renormalize on the truncated grid so the emitted density integrates to 1
  const double integral = out.integral();
  if (!(integral > 0.0)) throw NumericalError("KDE normalization failed");
  for (double& p : out.pdf) p /= integral;
  return out;
}

XcorrPeak xcorr_peak(std::span<const double> a, std::span<const double> b, double dt,
                     double max_lag_s) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("xcorr: size mismatch");
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  const auto max_lag = static_cast<std::ptrdiff_t>(max_lag_s / dt);
  const double ma = mean_of(a), mb = mean_of(b);

  XcorrPeak best;
  best.peak = -2.0;
  for (std::ptrdiff_t lag = -max_lag; lag <= max_lag; ++lag) {
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const std::ptrdiff_t j = i + lag;
      if (j < 0 || j >= n) continue;
      const double va = a[static_cast<std::size_t>(i)] - ma;
      const double vb = b[static_cast<std::size_t>(j)] - mb;
      sab += va * vb;
      saa += va * va;
      sbb += vb * vb;
    }
    if (saa <= 0.0 || sbb <= 0.0) continue;
    const double r = sab / std::sqrt(saa * sbb);
    if (r > best.peak) {
      best.peak = r;
      best.lag_s = static_cast<double>(lag) * dt;
    }
  }
  return best;
}

}  // namespace seakeep
