#include "seakeep/sim.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "seakeep/errors.hpp"

namespace seakeep {

void SimConfig::validate() const {
  if (!(dt_integrate > 0.0)) throw std::invalid_argument("dt_integrate must be > 0");
  const double ratio = dt_record / dt_integrate;
  if (std::abs(ratio - std::round(ratio)) > 1e-9 || ratio < 1.0)
    throw std::invalid_argument("dt_record must be an integer multiple of dt_integrate");
  if (!(duration_s > ramp_s)) throw std::invalid_argument("duration must exceed the ramp");
  if (ramp_s < 0.0 || speed_kts < 0.0) throw std::invalid_argument("negative ramp or speed");
}

double quadratic_roll_damping(double roll_inertia, double a0_rad, int cycles, double ratio) {
  return 3.0 * roll_inertia * (1.0 / ratio - 1.0) / (8.0 * cycles * a0_rad);
}

Equilibrium solve_static_equilibrium(HydroModel& model) {
  const double mg = model.mass_kg() * kGravity;
  const double lwl = model.hull().particulars.lwl_m;
  const double tol_f = 1e-8 * mg;
  const double tol_m = 1e-8 * mg * lwl;

  // infeasible loading: more weight than buoyancy at the deck edge
  const double vol_max = model.hull().displaced_volume(model.hull().depth_m, 0.0);
  if (model.mass_kg() > kRhoSeawater * vol_max)
    throw EquilibriumError("displacement exceeds buoyancy at full immersion");

  double draft = model.hull().particulars.draft_m;
  double trim = 0.0;

  auto resid = [&](double d, double tr) { return model.calm_forces_abs(d, tr); };
  auto norm = [&](const GeneralizedForce& f) {
    return std::abs(f.heave_n) / mg + std::abs(f.pitch_nm) / (mg * lwl);
  };

  GeneralizedForce r = resid(draft, trim);
  int it = 0;
  for (; it < 100; ++it) {
    if (std::abs(r.heave_n) < tol_f && std::abs(r.pitch_nm) < tol_m) break;

    const double dd = std::max(1e-6, 1e-5 * draft);
    const double dtr = 1e-7;
    const GeneralizedForce rd = resid(draft + dd, trim);
    const GeneralizedForce rt = resid(draft, trim + dtr);
    const double j11 = (rd.heave_n - r.heave_n) / dd;
    const double j12 = (rt.heave_n - r.heave_n) / dtr;
    const double j21 = (rd.pitch_nm - r.pitch_nm) / dd;
    const double j22 = (rt.pitch_nm - r.pitch_nm) / dtr;
    const double det = j11 * j22 - j12 * j21;
    if (!std::isfinite(det) || std::abs(det) < 1e-30)
      throw EquilibriumError("singular Jacobian in equilibrium solve");

    double step_d = -(j22 * r.heave_n - j12 * r.pitch_nm) / det;
    double step_t = -(-j21 * r.heave_n + j11 * r.pitch_nm) / det;

    double scale = 1.0;
    const double n0 = norm(r);
    for (int half = 0; half < 30; ++half) {
      const double nd = draft + scale * step_d;
      const double nt = trim + scale * step_t;
      if (nd > 1e-6 && std::abs(nt) < kPi / 4.0) {
        const GeneralizedForce rn = resid(nd, nt);
        if (norm(rn) < n0) {
          draft = nd;
          trim = nt;
          r = rn;
          break;
        }
      }
      scale *= 0.5;
      if (half == 29) throw EquilibriumError("equilibrium line search failed");
    }
  }
  if (it >= 100) throw EquilibriumError("equilibrium not converged in 100 iterations");

  model.set_equilibrium(draft, trim);
  Equilibrium eq;
  eq.draft_lcg_m = draft;
  eq.sinkage_m = draft - model.hull().particulars.draft_m;
  eq.trim_rad = trim;
  eq.iterations = it;
  return eq;
}

namespace {

struct RefOptions {
  double bq44 = 0.0;
  double roll_leak = 1.0;
  double heave_leak = 1.0;
  double pitch_leak = 1.0;
  double wander_amp_rad = 0.0;
  double wander_period_s = 60.0;
};

MotionRecord run_simulation(const HydroModel& model, const WaveField& field, const SimConfig& cfg,
                            const RefOptions& opt, const char* fidelity) {
  cfg.validate();
  if (!model.has_equilibrium()) throw EquilibriumError("solve static equilibrium before simulating");

  const double m33 = model.mass_kg() * (1.0 + cfg.coef.a33_frac);
  const double m44 = model.ixx() * (1.0 + cfg.coef.a44_frac);
  const double m55 = model.iyy() * (1.0 + cfg.coef.a55_frac);

  const Hydrostatics hs = model.hydrostatics();
  const double b33 = 2.0 * cfg.coef.b33_crit_frac * std::sqrt(std::max(0.0, hs.c33 * m33));
  const double b44 = 2.0 * cfg.coef.b44_crit_frac * std::sqrt(std::max(0.0, hs.c44 * m44));
  const double b55 = 2.0 * cfg.coef.b55_crit_frac * std::sqrt(std::max(0.0, hs.c55 * m55));

  const double speed = cfg.speed_mps();
  const bool leak_active =
      opt.roll_leak != 1.0 || opt.heave_leak != 1.0 || opt.pitch_leak != 1.0;
  const double wander_w = 2.0 * kPi / opt.wander_period_s;

  auto course_at = [&](double t) {
    return opt.wander_amp_rad == 0.0 ? 0.0 : opt.wander_amp_rad * std::sin(wander_w * t);
  };

  // state: z, roll, pitch, w, p, q, X, Y
  using State = std::array<double, 8>;
  auto deriv = [&](double t, const State& y) -> State {
    Pose pose;
    pose.z = y[0];
    pose.roll = y[1];
    pose.pitch = y[2];
    pose.x = y[6];
    pose.y = y[7];
    pose.course = course_at(t);

    GeneralizedForce f = model.forces(field, pose, t);
    if (leak_active) {
      const GeneralizedForce calm = model.calm_forces(pose);
      f.heave_n = calm.heave_n + opt.heave_leak * (f.heave_n - calm.heave_n);
      f.roll_nm = calm.roll_nm + opt.roll_leak * (f.roll_nm - calm.roll_nm);
      f.pitch_nm = calm.pitch_nm + opt.pitch_leak * (f.pitch_nm - calm.pitch_nm);
    }
    f.heave_n -= b33 * y[3];
    f.roll_nm -= b44 * y[4] + opt.bq44 * std::abs(y[4]) * y[4];
    f.pitch_nm -= b55 * y[5];

    State d;
    d[0] = y[3];
    d[1] = y[4];
    d[2] = y[5];
    d[3] = f.heave_n / m33;
    d[4] = f.roll_nm / m44;
    d[5] = f.pitch_nm / m55;
    d[6] = speed * std::cos(pose.course);
    d[7] = speed * std::sin(pose.course);
    return d;
  };

  const double dt = cfg.dt_integrate;
  const auto ratio = static_cast<std::size_t>(std::round(cfg.dt_record / dt));
  const auto n_steps = static_cast<std::size_t>(std::round(cfg.duration_s / dt));

  MotionRecord rec;
  rec.dt = cfg.dt_record;
  rec.meta.heading_deg = cfg.heading_deg;
  rec.meta.speed_kts = cfg.speed_kts;
  rec.meta.seed = field.seed();
  rec.meta.fidelity = fidelity;
  rec.meta.hull_id = model.hull().id;
  rec.meta.ramp_samples = static_cast<int>(std::round(cfg.ramp_s / cfg.dt_record));
  const std::size_t n_samples = (n_steps + ratio - 1) / ratio;
  rec.t.reserve(n_samples);

  State y{};
  y[0] = cfg.z0_m;
  y[1] = deg2rad(cfg.roll0_deg);
  y[2] = deg2rad(cfg.pitch0_deg);
  for (std::size_t step = 0; step < n_steps; ++step) {
    const double t = static_cast<double>(step) * dt;
    if (step % ratio == 0) {
      const double psi = course_at(t);
      const auto w = field.at(y[6], y[7], t);
      rec.t.push_back(static_cast<double>(rec.t.size()) * cfg.dt_record);
      rec.heave_m.push_back(y[0]);
      rec.roll_deg.push_back(rad2deg(y[1]));
      rec.pitch_deg.push_back(rad2deg(y[2]));
      rec.zeta_m.push_back(w.zeta);
      rec.dzdx.push_back(w.dzdx * std::cos(psi) + w.dzdy * std::sin(psi));
      rec.dzdy.push_back(-w.dzdx * std::sin(psi) + w.dzdy * std::cos(psi));
    }

    try {
      y = step_rk4<8>(deriv, t, y, dt);
    } catch (const ModelRangeError&) {
      rec.meta.truncated = true;
      break;
    }

    for (double v : y) {
      if (!std::isfinite(v))
        throw IntegrationError("non-finite state at t=" + std::to_string(t + dt));
    }
    if (std::abs(y[1]) > kPi / 4.0 || std::abs(y[2]) > kPi / 4.0) {
      rec.meta.truncated = true;
      break;
    }
  }
  return rec;
}

}  // namespace

MotionRecord simulate_lofi(const HydroModel& model, const WaveField& field, const SimConfig& cfg) {
  return run_simulation(model, field, cfg, RefOptions{}, "lofi");
}

MotionRecord simulate_hifi_ref(const HydroModel& model, const WaveField& field,
                               const SimConfig& cfg) {
  RefOptions opt;
  opt.bq44 = cfg.coef.bq44 >= 0.0
                 ? cfg.coef.bq44
                 : quadratic_roll_damping(model.ixx() * (1.0 + cfg.coef.a44_frac),
                                          deg2rad(10.0), 5);
  opt.roll_leak = cfg.coef.roll_leak;
  opt.heave_leak = cfg.coef.heave_leak;
  opt.pitch_leak = cfg.coef.pitch_leak;
  opt.wander_amp_rad = deg2rad(cfg.coef.wander_amp_deg);
  opt.wander_period_s = cfg.coef.wander_period_s;
  return run_simulation(model, field, cfg, opt, "hifi-ref");
}

}  // namespace seakeep
