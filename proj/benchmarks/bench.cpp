#include <benchmark/benchmark.h>

#include <random>

#include "quatdyn/dynamics.hpp"
#include "quatdyn/quad_form.hpp"

using namespace quatdyn;

namespace {

std::mt19937 gen(12345);

Quaternion random_unit_q() {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  return normalize(Quaternion{d(gen), {d(gen), d(gen), d(gen)}});
}

void bm_qmul(benchmark::State& state) {
  const Quaternion q = random_unit_q(), p = random_unit_q();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qmul(q, p));
  }
}
BENCHMARK(bm_qmul);

void bm_rotation_matrix(benchmark::State& state) {
  const Quaternion q = random_unit_q();
  for (auto _ : state) {
    benchmark::DoNotOptimize(rotation_matrix(q));
  }
}
BENCHMARK(bm_rotation_matrix);

void bm_sandwich(benchmark::State& state) {
  const Quaternion q = random_unit_q();
  const Vec3 x{0.3, -1.2, 0.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(rotate_to_body(q, x));
  }
}
BENCHMARK(bm_sandwich);

void bm_delta_gradient(benchmark::State& state) {
  const Vec4 q = random_unit_q().as_vec4();
  const Vec3 v{1.0, -0.5, 0.25}, w{0.1, 2.0, -0.3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(grad_single(v, w, q));
  }
}
BENCHMARK(bm_delta_gradient);

void bm_rk4_step(benchmark::State& state) {
  const InertiaMatrix inertia = InertiaMatrix::diagonal(1.0, 2.0, 3.0);
  const TorqueProfile torque = zero_torque();
  BodyState s{Quaternion{}, {1.0, 1.0, 1.0}};
  double t = 0.0;
  for (auto _ : state) {
    s = rk4_step(inertia, s, torque, t, 1e-3);
    t += 1e-3;
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(bm_rk4_step);

void bm_torque_free_propagation_1s(benchmark::State& state) {
  const InertiaMatrix inertia = InertiaMatrix::diagonal(1.0, 2.0, 3.0);
  const TorqueProfile torque = zero_torque();
  for (auto _ : state) {
    BodyState s{Quaternion{}, {1.0, 1.0, 1.0}};
    for (int i = 0; i < 1000; ++i) s = rk4_step(inertia, s, torque, i * 1e-3, 1e-3);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(bm_torque_free_propagation_1s);

}  // namespace

BENCHMARK_MAIN();
