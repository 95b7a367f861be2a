#include <benchmark/benchmark.h>

#include "seakeep/sim.hpp"
#include "seakeep/train.hpp"

using namespace seakeep;

namespace {

WaveField make_field(int n_per_system) {
  BimodalSeaState sea;
  sea.primary = {3.0, 6.5, 60.0};
  sea.secondary = {1.5, 11.5, 330.0};
  return build_bimodal_field(sea, n_per_system, 120.0, RngKey{1});
}

HydroModel make_model() {
  HullParticulars p;
  p.lwl_m = 142.0;
  p.beam_m = 19.06;
  p.draft_m = 6.51;
  p.disp_t = 9156.38;
  p.kg_m = 7.71;
  p.lcg_m = 72.1;
  HydroModel model(generate_hull(HullKind::FrigateParametric, p));
  solve_static_equilibrium(model);
  return model;
}

}  // namespace

static void BM_WavePointEval(benchmark::State& state) {
  auto field = make_field(static_cast<int>(state.range(0)));
  double t = 130.0;
  for (auto _ : state) {
    auto s = field.at(12.3, -4.5, t);
    benchmark::DoNotOptimize(s);
    t += 0.05;
  }
  state.SetItemsProcessed(state.iterations() * 2 * state.range(0));
}
BENCHMARK(BM_WavePointEval)->Arg(50)->Arg(100)->Arg(200);

static void BM_StripForces(benchmark::State& state) {
  auto model = make_model();
  auto field = make_field(static_cast<int>(state.range(0)));
  Pose pose;
  pose.roll = 0.05;
  pose.pitch = 0.01;
  double t = 130.0;
  for (auto _ : state) {
    pose.x = 5.1 * t;
    auto f = model.forces(field, pose, t);
    benchmark::DoNotOptimize(f);
    t += 0.05;
  }
}
BENCHMARK(BM_StripForces)->Arg(50)->Arg(100)->Arg(200);

static void BM_SimulateSecond(benchmark::State& state) {
  // one simulated second (20 RK4 steps) of the low-fidelity model
  auto model = make_model();
  auto field = make_field(100);
  SimConfig cfg;
  cfg.duration_s = 130.0;
  cfg.ramp_s = 120.0;
  for (auto _ : state) {
    state.PauseTiming();
    SimConfig c = cfg;
    c.duration_s = 121.0 + static_cast<double>(state.iterations() % 3);
    state.ResumeTiming();
    auto rec = simulate_lofi(model, field, c);
    benchmark::DoNotOptimize(rec);
  }
}
BENCHMARK(BM_SimulateSecond)->Unit(benchmark::kMillisecond);

static void BM_LstmForwardStep(benchmark::State& state) {
  const int hidden = static_cast<int>(state.range(0));
  CounterRng rng = CounterRng::keyed(9);
  auto net = LstmNetwork::create(6, hidden, 3, 3, rng);
  Mat x(6, 256);
  for (int i = 0; i < x.size(); ++i) x.data()[i] = rng.normal();
  for (auto _ : state) {
    Mat y = network_forward(net, x);
    benchmark::DoNotOptimize(y);
  }
  state.SetItemsProcessed(state.iterations() * 256);
}
BENCHMARK(BM_LstmForwardStep)->Arg(32)->Arg(150);

static void BM_LstmBpttChunk(benchmark::State& state) {
  const int hidden = static_cast<int>(state.range(0));
  CounterRng rng = CounterRng::keyed(10);
  auto net = LstmNetwork::create(6, hidden, 3, 3, rng);
  Mat x(6, 500), target(3, 500);
  for (int i = 0; i < x.size(); ++i) x.data()[i] = rng.normal();
  for (int i = 0; i < target.size(); ++i) target.data()[i] = rng.normal();
  for (auto _ : state) {
    NetGrads g = NetGrads::zeros_like(net);
    NetState s = NetState::zeros(net);
    double loss = bptt_gradients(net, x, target, s, g);
    benchmark::DoNotOptimize(loss);
    benchmark::DoNotOptimize(g);
  }
  state.SetItemsProcessed(state.iterations() * 500);
}
BENCHMARK(BM_LstmBpttChunk)->Arg(32)->Arg(150)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
