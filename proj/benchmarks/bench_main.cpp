#include <benchmark/benchmark.h>

#include <random>

#include "spinrep/clifford.hpp"
#include "spinrep/cohomology.hpp"
#include "spinrep/group.hpp"
#include "spinrep/quaternion.hpp"
#include "spinrep/representation.hpp"
#include "spinrep/rotation.hpp"
#include "spinrep/spincover.hpp"

using namespace spinrep;

namespace {

Quaternion random_quaternion(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    return {d(rng), d(rng), d(rng), d(rng)};
}

void QuaternionMultiply(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const Quaternion a = random_quaternion(rng), b = random_quaternion(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(QuaternionMultiply);

void Rodrigues(benchmark::State& state) {
    const AxisAngle p(Eigen::Vector3d(1, 2, 2).normalized(), 0.7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rodrigues(p));
    }
}
BENCHMARK(Rodrigues);

void ComposeAxisAngle(benchmark::State& state) {
    const AxisAngle p(Eigen::Vector3d::UnitX(), 1.1);
    const AxisAngle q(Eigen::Vector3d(0, 1, 1).normalized(), -2.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose(p, q));
    }
}
BENCHMARK(ComposeAxisAngle);

void LiftRotation(benchmark::State& state) {
    const RotationMatrix3 r = rodrigues(AxisAngle(Eigen::Vector3d(1, 0, 1).normalized(), 2.0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lift(r));
    }
}
BENCHMARK(LiftRotation);

void CoveringMap(benchmark::State& state) {
    const SU2Element u = one_param_su2(2, 0.9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(covering_map(u));
    }
}
BENCHMARK(CoveringMap);

void SchurMultiplierBench(benchmark::State& state) {
    static const char* names[] = {"Z2xZ2", "S3", "D4", "Q8", "S4"};
    const FiniteGroup g = builtin_group(names[state.range(0)]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(schur_multiplier(g));
    }
    state.SetLabel(names[state.range(0)]);
}
BENCHMARK(SchurMultiplierBench)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void CliffordPipeline(benchmark::State& state) {
    const FiniteGroup h = builtin_group("D4");
    const MatrixRep tau = builtin_representation("D4-2dim");
    const std::vector<int> n = center(h);
    for (auto _ : state) {
        const IsotypicRestriction res = restrict_isotypic(h, n, tau);
        benchmark::DoNotOptimize(clifford_decompose(h, n, tau, res.rho, res.multiplicity));
    }
}
BENCHMARK(CliffordPipeline)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
