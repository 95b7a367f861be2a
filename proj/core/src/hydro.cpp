#include "seakeep/hydro.hpp"

#include <cmath>

#include "seakeep/errors.hpp"

namespace seakeep {

namespace {
constexpr double kMaxAngleRad = kPi / 4.0;  // model validity bound
}

HydroModel::HydroModel(HullOffsets hull, int n_z)
    : hull_(std::move(hull)), bonjean_(BonjeanTable::build(hull_, n_z)) {
  levers_.resize(static_cast<std::size_t>(bonjean_.station_count()));
  for (int s = 0; s < bonjean_.station_count(); ++s)
    levers_[static_cast<std::size_t>(s)] = hull_.particulars.lcg_m - bonjean_.station_x(s);
}

void HydroModel::set_equilibrium(double draft_lcg, double trim_rad) {
  ref_ = Reference{draft_lcg, trim_rad};
}

double HydroModel::draft_lcg() const {
  if (!ref_) throw EquilibriumError("equilibrium not solved");
  return ref_->draft_lcg;
}

double HydroModel::trim() const {
  if (!ref_) throw EquilibriumError("equilibrium not solved");
  return ref_->trim;
}

GeneralizedForce HydroModel::strip_forces(const WaveField* field, double draft_lcg,
                                          double total_trim, double roll, const Pose* pose,
                                          double t, SectionalForcing* sections) const {
  const int n = bonjean_.station_count();
  const double kg = hull_.particulars.kg_m;
  const double rho_g = kRhoSeawater * kGravity;

  const double tan_trim = std::tan(total_trim);
  const double cos_trim = std::cos(total_trim);
  const double tan_roll = std::tan(roll);
  const double cos_roll = std::cos(roll);

  // Per-station incident wave samples, split by spectral system.
  std::vector<WaveField::SplitSample> wave;
  double ramp = 0.0, kappa[2] = {0.0, 0.0};
  double cos_c = 1.0, sin_c = 0.0;
  if (field != nullptr) {
    wave.resize(static_cast<std::size_t>(n));
    cos_c = std::cos(pose->course);
    sin_c = std::sin(pose->course);
    field->eval_along(pose->x, pose->y, cos_c, sin_c, levers_, t, wave);
    ramp = field->ramp(t);
  }

  GeneralizedForce f;
  if (sections != nullptr) {
    sections->x.resize(static_cast<std::size_t>(n));
    sections->heave_n_m.resize(static_cast<std::size_t>(n));
    sections->roll_nm_m.resize(static_cast<std::size_t>(n));
    sections->pitch_nm_m.resize(static_cast<std::size_t>(n));
  }

  for (int s = 0; s < n; ++s) {
    const double lever = levers_[static_cast<std::size_t>(s)];
    const double h0 = draft_lcg + lever * tan_trim;  // calm immersion

    double eta = 0.0, slope_x = 0.0, slope_y = 0.0;
    if (field != nullptr && ramp > 0.0) {
      // Attenuation depth from the calm-water section; exact bottom-pressure
      // decay for wall-sided sections.
      const auto sec0 = bonjean_.section(s, h0);
      const double d_eff = std::max(0.0, 2.0 * (h0 - sec0.centroid_z));
      for (int sys = 0; sys < 2; ++sys) {
        const double km = field->mean_wavenumber(sys);
        const double att = ramp * std::exp(-km * d_eff);
        const auto& w = wave[static_cast<std::size_t>(s)].system[sys];
        eta += att * w.zeta;
        // rotate field slopes into the ship frame
        slope_x += att * (w.dzdx * cos_c + w.dzdy * sin_c);
        slope_y += att * (-w.dzdx * sin_c + w.dzdy * cos_c);
      }
    }

    const auto sec = bonjean_.section(s, h0 + eta);
    const double zb_kg = sec.centroid_z - kg;
    const double mu = slope_y - tan_roll;  // relative transverse inclination

    const double fz = rho_g * sec.area;
    const double mx = rho_g * cos_roll * mu * (sec.inertia_t + sec.area * zb_kg);
    const double my =
        -rho_g * sec.area * cos_trim * (lever + zb_kg * (tan_trim + slope_x));

    const double w = bonjean_.station_weight(s);
    f.heave_n += fz * w;
    f.roll_nm += mx * w;
    f.pitch_nm += my * w;
    if (sections != nullptr) {
      sections->x[static_cast<std::size_t>(s)] = bonjean_.station_x(s);
      sections->heave_n_m[static_cast<std::size_t>(s)] = fz;
      sections->roll_nm_m[static_cast<std::size_t>(s)] = mx;
      sections->pitch_nm_m[static_cast<std::size_t>(s)] = my;
    }
  }

  f.heave_n -= mass_kg() * kGravity;  // gravity acts at the CG: no moment terms
  return f;
}

GeneralizedForce HydroModel::forces(const WaveField& field, const Pose& pose, double t,
                                    SectionalForcing* sections) const {
  if (!ref_) throw EquilibriumError("equilibrium not solved");
  if (std::abs(pose.roll) > kMaxAngleRad || std::abs(pose.pitch) > kMaxAngleRad)
    throw ModelRangeError("pose outside +-45 deg validity range");
  const double draft = ref_->draft_lcg - pose.z;
  const double trim = ref_->trim + pose.pitch;
  return strip_forces(&field, draft, trim, pose.roll, &pose, t, sections);
}

GeneralizedForce HydroModel::calm_forces_abs(double draft_lcg, double trim_rad) const {
  return strip_forces(nullptr, draft_lcg, trim_rad, 0.0, nullptr, 0.0, nullptr);
}

GeneralizedForce HydroModel::calm_forces(const Pose& pose) const {
  if (!ref_) throw EquilibriumError("equilibrium not solved");
  if (std::abs(pose.roll) > kMaxAngleRad || std::abs(pose.pitch) > kMaxAngleRad)
    throw ModelRangeError("pose outside +-45 deg validity range");
  return strip_forces(nullptr, ref_->draft_lcg - pose.z, ref_->trim + pose.pitch, pose.roll,
                      nullptr, 0.0, nullptr);
}

Hydrostatics HydroModel::hydrostatics() const {
  if (!ref_) throw EquilibriumError("equilibrium not solved");
  Hydrostatics h;
  const int n = bonjean_.station_count();
  double vol = 0.0, mz = 0.0, awp = 0.0, it = 0.0, il = 0.0;
  for (int s = 0; s < n; ++s) {
    const double lever = levers_[static_cast<std::size_t>(s)];
    const double wl = ref_->draft_lcg + lever * std::tan(ref_->trim);
    const auto sec = bonjean_.section(s, wl);
    const double w = bonjean_.station_weight(s);
    vol += sec.area * w;
    mz += sec.area * sec.centroid_z * w;
    awp += 2.0 * sec.halfbeam * w;
    it += sec.inertia_t * w;
    il += 2.0 * sec.halfbeam * lever * lever * w;
  }
  h.volume_m3 = vol;
  h.awp_m2 = awp;
  h.kb_m = vol > 0.0 ? mz / vol : 0.0;
  h.bm_t_m = vol > 0.0 ? it / vol : 0.0;
  h.bm_l_m = vol > 0.0 ? il / vol : 0.0;
  const double kg = hull_.particulars.kg_m;
  h.gm_t_m = h.kb_m + h.bm_t_m - kg;
  h.gm_l_m = h.kb_m + h.bm_l_m - kg;
  const double rho_g = kRhoSeawater * kGravity;
  h.c33 = rho_g * awp;
  h.c44 = rho_g * vol * h.gm_t_m;
  h.c55 = rho_g * vol * h.gm_l_m;
  return h;
}

}  // namespace seakeep
