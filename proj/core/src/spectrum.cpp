#include "seakeep/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace seakeep {

namespace {
// Truncate the discretization band where cumulative energy reaches 99.9%.
constexpr double kEnergyCoverage = 0.999;
}  // namespace

void SpectrumParams::validate() const {
  if (!(hs >= 0.0) || !std::isfinite(hs)) throw std::domain_error("hs must be >= 0");
  if (!(tp > 0.0) || !std::isfinite(tp)) throw std::domain_error("tp must be > 0");
  if (dir_deg < 0.0 || dir_deg >= 360.0 || !std::isfinite(dir_deg))
    throw std::domain_error("dir must be normalized to [0, 360)");
}

void BimodalSeaState::validate() const {
  primary.validate();
  secondary.validate();
}

double spectrum_density(const SpectrumParams& p, double omega) {
  if (!(omega > 0.0)) throw std::domain_error("omega must be > 0");
  if (!(p.tp > 0.0)) throw std::domain_error("tp must be > 0");
  if (p.hs == 0.0) return 0.0;
  const double wm = p.omega_m();
  const double r = wm / omega;
  const double r4 = r * r * r * r;
  return (5.0 / 16.0) * p.hs * p.hs * (r4 / omega) * std::exp(-1.25 * r4);
}

double wave_heading_rad(double dir_deg) { return kPi - deg2rad(dir_deg); }

namespace {

/// Inverse of the cumulative spectrum: omega at which the integral of S
/// from 0 equals frac * m0. Closed form for the Bretschneider shape,
/// whose CDF is m0 * exp(-1.25 (wm/w)^4).
double omega_at_energy_fraction(const SpectrumParams& p, double frac) {
  const double wm = p.omega_m();
  return wm * std::pow(std::log(1.0 / frac) / 1.25, -0.25);
}

}  // namespace

std::vector<WaveComponent> discretize_spectrum(const SpectrumParams& p, int n,
                                               Discretization scheme, CounterRng& rng) {
  p.validate();
  if (p.hs == 0.0) return {};
  if (n < 1) throw std::invalid_argument("component count must be >= 1 when hs > 0");

  const double m0 = p.m0();
  const double heading = wave_heading_rad(p.dir_deg);
  std::vector<WaveComponent> out;
  out.reserve(static_cast<std::size_t>(n));

  if (scheme == Discretization::EqualEnergy) {
    // Bands of equal energy inside the covered range; each component sits at
    // its band's energy midpoint. Amplitudes carry m0/n each so the total
    // variance is exact regardless of truncation.
    const double a = std::sqrt(2.0 * m0 / n);
    for (int i = 0; i < n; ++i) {
      const double frac = kEnergyCoverage * (i + 0.5) / n;
      const double w = omega_at_energy_fraction(p, frac);
      WaveComponent c;
      c.amplitude = a;
      c.omega = w;
      c.k = w * w / kGravity;
      c.heading = heading;
      c.phase = rng.uniform(0.0, 2.0 * kPi);
      out.push_back(c);
    }
  } else {
    const double lo = omega_at_energy_fraction(p, (1.0 - kEnergyCoverage) / 2.0);
    const double hi = omega_at_energy_fraction(p, 1.0 - (1.0 - kEnergyCoverage) / 2.0);
    const double dw = (hi - lo) / n;
    for (int i = 0; i < n; ++i) {
      const double w = lo + (i + 0.5) * dw;
      WaveComponent c;
      c.amplitude = std::sqrt(2.0 * spectrum_density(p, w) * dw);
      c.omega = w;
      c.k = w * w / kGravity;
      c.heading = heading;
      c.phase = rng.uniform(0.0, 2.0 * kPi);
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace seakeep
