#include "seakeep/wave_field.hpp"

#include <cassert>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "seakeep/csv.hpp"

namespace seakeep {

WaveField::WaveField(std::vector<WaveComponent> primary, std::vector<WaveComponent> secondary,
                     double ramp_s, RngKey seed)
    : primary_count_(primary.size()), ramp_s_(ramp_s), seed_(seed) {
  if (ramp_s < 0.0) throw std::invalid_argument("ramp_duration must be >= 0");
  components_ = std::move(primary);
  components_.insert(components_.end(), secondary.begin(), secondary.end());

  double e[2] = {0.0, 0.0};
  double ek[2] = {0.0, 0.0};
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    const int sys = i < primary_count_ ? 0 : 1;
    const double a2 = c.amplitude * c.amplitude;
    e[sys] += a2;
    ek[sys] += a2 * c.k;
    total_m0_ += 0.5 * a2;
  }
  for (int s = 0; s < 2; ++s) mean_k_[s] = e[s] > 0.0 ? ek[s] / e[s] : 0.0;
}

double WaveField::ramp(double t) const {
  if (ramp_s_ <= 0.0) return 1.0;
  if (t <= 0.0) return 0.0;
  if (t >= ramp_s_) return 1.0;
  return t / ramp_s_;
}

WaveField::Sample WaveField::at(double x, double y, double t) const {
  const double r = ramp(t);
  Sample s;
  for (const auto& c : components_) {
    const double ct = std::cos(c.heading);
    const double st = std::sin(c.heading);
    const double arg = c.k * (x * ct + y * st) - c.omega * t + c.phase;
    const double cosv = std::cos(arg);
    const double sinv = std::sin(arg);
    s.zeta += c.amplitude * cosv;
    s.dzdx -= c.amplitude * c.k * ct * sinv;
    s.dzdy -= c.amplitude * c.k * st * sinv;
  }
  s.zeta *= r;
  s.dzdx *= r;
  s.dzdy *= r;
  return s;
}

WaveField::SplitSample WaveField::split_at(double x, double y, double t) const {
  SplitSample out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    Sample& s = out.system[i < primary_count_ ? 0 : 1];
    const double ct = std::cos(c.heading);
    const double st = std::sin(c.heading);
    const double arg = c.k * (x * ct + y * st) - c.omega * t + c.phase;
    const double cosv = std::cos(arg);
    const double sinv = std::sin(arg);
    s.zeta += c.amplitude * cosv;
    s.dzdx -= c.amplitude * c.k * ct * sinv;
    s.dzdy -= c.amplitude * c.k * st * sinv;
  }
  return out;
}

void WaveField::eval_along(double x0, double y0, double cos_c, double sin_c,
                           std::span<const double> offsets, double t,
                           std::span<SplitSample> out) const {
  assert(out.size() == offsets.size());
  const std::size_t n = offsets.size();
  for (auto& o : out) o = SplitSample{};
  if (n == 0) return;

  // Uniform spacing enables a per-component rotation recurrence instead of
  // n sin/cos evaluations.
  bool uniform = n >= 3;
  const double step = n > 1 ? offsets[1] - offsets[0] : 0.0;
  for (std::size_t j = 2; uniform && j < n; ++j) {
    if (std::abs((offsets[j] - offsets[j - 1]) - step) > 1e-9) uniform = false;
  }

  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    const int sys = i < primary_count_ ? 0 : 1;
    const double ct = std::cos(c.heading);
    const double st = std::sin(c.heading);
    const double gx = c.amplitude * c.k * ct;  // slope weights
    const double gy = c.amplitude * c.k * st;
    const double base = c.k * (x0 * ct + y0 * st) - c.omega * t + c.phase;
    const double along = c.k * (cos_c * ct + sin_c * st);

    if (uniform && n > 1) {
      double cosv = std::cos(base + offsets[0] * along);
      double sinv = std::sin(base + offsets[0] * along);
      const double cd = std::cos(step * along);
      const double sd = std::sin(step * along);
      for (std::size_t j = 0; j < n; ++j) {
        Sample& s = out[j].system[sys];
        s.zeta += c.amplitude * cosv;
        s.dzdx -= gx * sinv;
        s.dzdy -= gy * sinv;
        const double nc = cosv * cd - sinv * sd;
        sinv = sinv * cd + cosv * sd;
        cosv = nc;
      }
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        const double arg = base + offsets[j] * along;
        Sample& s = out[j].system[sys];
        const double cosv = std::cos(arg);
        const double sinv = std::sin(arg);
        s.zeta += c.amplitude * cosv;
        s.dzdx -= gx * sinv;
        s.dzdy -= gy * sinv;
      }
    }
  }
}

WaveField build_bimodal_field(const BimodalSeaState& sea, int n_per_system, double ramp_s,
                              RngKey seed, Discretization scheme) {
  sea.validate();
  CounterRng rng_primary = CounterRng::keyed(seed, 1);
  CounterRng rng_secondary = CounterRng::keyed(seed, 2);
  auto primary = discretize_spectrum(sea.primary, n_per_system, scheme, rng_primary);
  auto secondary = discretize_spectrum(sea.secondary, n_per_system, scheme, rng_secondary);
  return WaveField(std::move(primary), std::move(secondary), ramp_s, seed);
}

std::vector<TracePoint> encounter_trace(const WaveField& f, double speed_mps, double course_deg,
                                        double duration_s, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
  if (duration_s < dt) throw std::invalid_argument("duration must be >= dt");
  const double cc = std::cos(deg2rad(course_deg));
  const double sc = std::sin(deg2rad(course_deg));
  const auto count = static_cast<std::size_t>(std::floor(duration_s / dt)) + 1;
  std::vector<TracePoint> trace(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = i * dt;
    const double x = speed_mps * t * cc;
    const double y = speed_mps * t * sc;
    auto s = f.at(x, y, t);
    // report slopes in the course frame
    TracePoint p;
    p.t = t;
    p.s.zeta = s.zeta;
    p.s.dzdx = s.dzdx * cc + s.dzdy * sc;
    p.s.dzdy = -s.dzdx * sc + s.dzdy * cc;
    trace[i] = p;
  }
  return trace;
}

void write_trace_csv(const std::filesystem::path& file, std::span<const TracePoint> trace) {
  std::ostringstream out;
  out << "t,zeta,dzdx,dzdy\n";
  for (const auto& p : trace) {
    out << fmt_g9(p.t) << ',' << fmt_g9(p.s.zeta) << ',' << fmt_g9(p.s.dzdx) << ','
        << fmt_g9(p.s.dzdy) << '\n';
  }
  write_file(file, out.str());
}

}  // namespace seakeep
