#include <benchmark/benchmark.h>

#include <zinbiel/cohomology.hpp>
#include <zinbiel/extension.hpp>
#include <zinbiel/zinf.hpp>

using namespace zinbiel;

namespace {

CrossedModule small_crossed() {
    CrossedModule x;
    x.g = truncated_shuffle(3);
    x.g.labels.clear();
    x.h = Algebra::zero(2);
    x.phi = Matrix(3, 2);
    x.phi.at(2, 0) = 1;
    x.action = Bimodule::zero(3, 2);
    x.action.left.at({0, 0, 1}) = 1;
    x.action.right.at({0, 0, 1}) = 1;
    return x;
}

void BM_assemble_d2(benchmark::State& state) {
    Algebra a = truncated_shuffle(static_cast<std::size_t>(state.range(0)));
    Bimodule v = regular_bimodule(a);
    for (auto _ : state) benchmark::DoNotOptimize(coboundary_matrix(a, v, 2));
}

void BM_assemble_d3(benchmark::State& state) {
    Algebra a = truncated_shuffle(static_cast<std::size_t>(state.range(0)));
    Bimodule v = regular_bimodule(a);
    for (auto _ : state) benchmark::DoNotOptimize(coboundary_matrix(a, v, 3));
}

void BM_rref_d2(benchmark::State& state) {
    Algebra a = truncated_shuffle(static_cast<std::size_t>(state.range(0)));
    Matrix d2 = coboundary_matrix(a, regular_bimodule(a), 2);
    for (auto _ : state) benchmark::DoNotOptimize(rref(d2));
}

void BM_rref_d3(benchmark::State& state) {
    Algebra a = truncated_shuffle(static_cast<std::size_t>(state.range(0)));
    Matrix d3 = coboundary_matrix(a, regular_bimodule(a), 3);
    for (auto _ : state) benchmark::DoNotOptimize(rref(d3));
}

void BM_check_zinf_skeletal(benchmark::State& state) {
    Algebra a = truncated_shuffle(4);
    Bimodule v = regular_bimodule(a);
    TwoTermZinf L = skeletal_from_cocycle(a, v, random_cocycle(a, v, 3, 1));
    for (auto _ : state) benchmark::DoNotOptimize(check_zinf(L));
}

void BM_theta(benchmark::State& state) {
    CrossedExtension E = extension_from_crossed(small_crossed());
    SectionPair sp = choose_sections(E, SectionStrategy::pivot);
    for (auto _ : state) benchmark::DoNotOptimize(theta(E, sp));
}

BENCHMARK(BM_assemble_d2)->DenseRange(3, 5);
BENCHMARK(BM_assemble_d3)->DenseRange(3, 5);
BENCHMARK(BM_rref_d2)->DenseRange(3, 5);
BENCHMARK(BM_rref_d3)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_check_zinf_skeletal);
BENCHMARK(BM_theta);

} // namespace

BENCHMARK_MAIN();
