#pragma once

#include <vector>

#include "seakeep/constants.hpp"
#include "seakeep/rng.hpp"

namespace seakeep {

/// Two-parameter (Bretschneider) wave spectrum of one sea system.
/// Direction convention: 0 deg = head seas (waves arriving from dead ahead of
/// the reference course), 180 deg = following seas.
struct SpectrumParams {
  double hs = 0.0;       // significant wave height [m]
  double tp = 1.0;       // modal period [s]
  double dir_deg = 0.0;  // relative direction, normalized to [0, 360)

  double m0() const { return hs * hs / 16.0; }
  double omega_m() const { return 2.0 * kPi / tp; }
  /// Throws std::domain_error / std::invalid_argument on bad parameters.
  void validate() const;
};

/// Two sea systems (wind sea + swell). Either may carry zero energy.
struct BimodalSeaState {
  SpectrumParams primary;
  SpectrumParams secondary;

  double m0_total() const { return primary.m0() + secondary.m0(); }
  void validate() const;
};

/// One linear, long-crested wave train. Deep-water dispersion k = omega^2/g.
struct WaveComponent {
  double amplitude = 0.0;  // [m]
  double omega = 0.0;      // [rad/s]
  double k = 0.0;          // [rad/m]
  double heading = 0.0;    // propagation direction in the course frame [rad]
  double phase = 0.0;      // [rad]
};

/// Spectral density S(omega) in m^2 s. Zero-energy spectra return 0.
double spectrum_density(const SpectrumParams& p, double omega);

enum class Discretization { EqualEnergy, EqualFrequency };

/// Split a spectrum into n components. Equal-energy places components at the
/// energy centroids of n equal-m0 bands (amplitudes carry the full m0 exactly);
/// equal-frequency uses a uniform omega grid over the 99.9% energy band.
/// Phases are i.i.d. uniform [0, 2*pi) from rng; every heading equals p.dir.
std::vector<WaveComponent> discretize_spectrum(const SpectrumParams& p, int n,
                                               Discretization scheme, CounterRng& rng);

/// Propagation heading [rad] in the course frame for a relative wave
/// direction in degrees (0 = head seas -> waves travel toward -x).
double wave_heading_rad(double dir_deg);

}  // namespace seakeep
