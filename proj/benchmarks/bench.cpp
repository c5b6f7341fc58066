#include "hdm/amoeba.hpp"
#include "hdm/catalog.hpp"
#include "hdm/free_energy.hpp"
#include "hdm/honeycomb.hpp"
#include "hdm/kasteleyn.hpp"
#include "hdm/models.hpp"
#include "hdm/random.hpp"
#include "hdm/scalarization.hpp"

#include <benchmark/benchmark.h>

using namespace hdm;

static void BM_EnumerateHoneycomb(benchmark::State& st) {
    auto p = honeycomb_patch(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_multiwebs(p.g).size());
}
BENCHMARK(BM_EnumerateHoneycomb)->DenseRange(1, 4);

static void BM_VerifyMainHoneycomb(benchmark::State& st) {
    auto p = honeycomb_patch(static_cast<int>(st.range(0)));
    Rng rng(3);
    auto c = random_connection(p.g, rng);
    for (auto _ : st) benchmark::DoNotOptimize(verify_main_theorem(p.g, c).holds());
}
BENCHMARK(BM_VerifyMainHoneycomb)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_ScalarizeVerify(benchmark::State& st) {
    auto p = honeycomb_patch(1);
    std::vector<H26Weights> w(p.g.vertices.size(), H26Weights::ones());
    auto s = scalarize_weights(p.g, w, GadgetBlocks{p.block_black, p.block_white});
    for (auto _ : st) benchmark::DoNotOptimize(verify_measure_all(s).size());
}
BENCHMARK(BM_ScalarizeVerify)->Unit(benchmark::kMillisecond);

static void BM_FreeEnergy(benchmark::State& st) {
    auto L = LaurentPoly2(1) + LaurentPoly2::z() + LaurentPoly2::w();
    auto P = L * L;
    for (auto _ : st) benchmark::DoNotOptimize(free_energy(P, 1e-4, static_cast<int>(st.range(0))).value);
}
BENCHMARK(BM_FreeEnergy)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_AmoebaGasPhase(benchmark::State& st) {
    auto P = twentyv_charpoly(twentyv_weights(make_point(twentyv_family(Q(2)))));
    AmoebaGrid grid;
    grid.threads = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(gas_phase_detect(amoeba_cloud(P, grid), grid).hole_area);
}
BENCHMARK(BM_AmoebaGasPhase)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
