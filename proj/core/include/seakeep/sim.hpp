#pragma once

#include <array>
#include <cstddef>

#include "seakeep/hydro.hpp"
#include "seakeep/motion.hpp"

namespace seakeep {

/// Tuned constant radiation/diffraction coefficients plus the reference-model
/// stand-in knobs. Added mass and linear damping are given as fractions of
/// rigid inertia and critical damping so they follow the hull.
struct HydroCoefficients {
  double a33_frac = 0.8;   // added mass / m
  double a44_frac = 0.25;  // added roll inertia / Ixx
  double a55_frac = 0.9;   // added pitch inertia / Iyy
  double b33_crit_frac = 0.05;
  double b44_crit_frac = 0.08;
  double b55_crit_frac = 0.05;
  // reference-model stand-in physics (ignored by the low-fidelity model).
  // Wave-excitation retention factors emulate energy transfer into the
  // unmodeled lateral degrees of freedom; the 3-DOF model otherwise
  // over-predicts every channel, roll most of all.
  double bq44 = -1.0;            // quadratic roll damping; <0 = auto-size so a
                                 // 10 deg free decay halves in 5 cycles
  double roll_leak = 0.78;       // wave roll-moment retention factor (0,1]
  double heave_leak = 0.93;      // wave heave-force retention factor (0,1]
  double pitch_leak = 0.90;      // wave pitch-moment retention factor (0,1]
  double wander_amp_deg = 5.0;   // sinusoidal heading wander about the course
  double wander_period_s = 50.0;
};

struct SimConfig {
  double dt_integrate = 0.05;
  double dt_record = 0.1;
  double duration_s = 1920.0;
  double ramp_s = 120.0;
  double speed_kts = 10.0;
  double heading_deg = 0.0;  // ordered primary relative wave heading (metadata)
  HydroCoefficients coef;
  // initial offsets from equilibrium (free-decay studies)
  double z0_m = 0.0;
  double roll0_deg = 0.0;
  double pitch0_deg = 0.0;

  double speed_mps() const { return speed_kts * kKnotsToMps; }
  void validate() const;
};

struct Equilibrium {
  double sinkage_m = 0.0;   // draft_lcg - design draft
  double trim_rad = 0.0;
  double draft_lcg_m = 0.0;
  int iterations = 0;
};

/// Damped Newton iteration on (draft, trim) until the calm-water residual is
/// below 1e-8 of displacement*g. Stores the result on the model.
Equilibrium solve_static_equilibrium(HydroModel& model);

/// Classical RK4 step of dy/dt = deriv(t, y).
template <std::size_t N, typename F>
std::array<double, N> step_rk4(F&& deriv, double t, const std::array<double, N>& y, double dt) {
  std::array<double, N> k1 = deriv(t, y);
  std::array<double, N> tmp;
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
  std::array<double, N> k2 = deriv(t + 0.5 * dt, tmp);
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
  std::array<double, N> k3 = deriv(t + 0.5 * dt, tmp);
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + dt * k3[i];
  std::array<double, N> k4 = deriv(t + dt, tmp);
  std::array<double, N> out;
  for (std::size_t i = 0; i < N; ++i)
    out[i] = y[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

/// Low-fidelity 3-DOF simulation: volume-method FK/hydrostatic forcing with
/// constant added mass and linear damping, fixed ordered course.
MotionRecord simulate_lofi(const HydroModel& model, const WaveField& field, const SimConfig& cfg);

/// Higher-fidelity reference stand-in: the low-fidelity core plus quadratic
/// roll damping, a roll wave-moment leakage factor and slow sinusoidal
/// heading wander. Stand-in physics, not a potential-flow solution; serves as
/// the training target in place of external high-fidelity records.
MotionRecord simulate_hifi_ref(const HydroModel& model, const WaveField& field,
                               const SimConfig& cfg);

/// Quadratic roll damping sized so a free decay from `a0_rad` halves after
/// `cycles` cycles: bq = 3 M (1/ratio - 1) / (8 cycles a0).
double quadratic_roll_damping(double roll_inertia, double a0_rad, int cycles, double ratio = 0.5);

}  // namespace seakeep
