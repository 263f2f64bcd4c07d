// Parallel vs serial exact kernels on CSCom(SD_8n) Laplacians.

#include <benchmark/benchmark.h>

#include "supergraph/modular.hpp"
#include "supergraph/reference.hpp"
#include "supergraph/spectral.hpp"

using namespace supergraph;

namespace {

IntegerMatrix cscom_laplacian(unsigned n)
{
    auto g = std::make_shared<const GroupTable>(build_group(Family::Semidihedral, n));
    return laplacian(cscom_graph(g));
}

void BM_CharPolyParallel(benchmark::State& state)
{
    const IntegerMatrix l = cscom_laplacian(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(l, Execution::Parallel));
    state.counters["N"] = static_cast<double>(l.dim());
    state.counters["threads"] = thread_count();
}

void BM_CharPolySerial(benchmark::State& state)
{
    const IntegerMatrix l = cscom_laplacian(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(l, Execution::Serial));
    state.counters["N"] = static_cast<double>(l.dim());
}

void BM_CharPolyBerkowitz(benchmark::State& state)
{
    const IntegerMatrix l = cscom_laplacian(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::char_poly_berkowitz(l));
    state.counters["N"] = static_cast<double>(l.dim());
}

void BM_CharPolyOnePrime(benchmark::State& state)
{
    const IntegerMatrix l = cscom_laplacian(static_cast<unsigned>(state.range(0)));
    const auto reduced = modular::reduce(l, modular::primes(1).front());
    for (auto _ : state) benchmark::DoNotOptimize(modular::char_poly_mod(reduced));
    state.counters["N"] = static_cast<double>(l.dim());
}

void BM_DeterminantParallel(benchmark::State& state)
{
    const IntegerMatrix m = cscom_laplacian(static_cast<unsigned>(state.range(0))).minor(0);
    for (auto _ : state) benchmark::DoNotOptimize(determinant(m, Execution::Parallel));
}

void BM_DeterminantSerial(benchmark::State& state)
{
    const IntegerMatrix m = cscom_laplacian(static_cast<unsigned>(state.range(0))).minor(0);
    for (auto _ : state) benchmark::DoNotOptimize(determinant(m, Execution::Serial));
}

void BM_DeterminantBareiss(benchmark::State& state)
{
    const IntegerMatrix m = cscom_laplacian(static_cast<unsigned>(state.range(0))).minor(0);
    for (auto _ : state) benchmark::DoNotOptimize(reference::determinant_bareiss(m));
}

void BM_NullityParallel(benchmark::State& state)
{
    const IntegerMatrix l = cscom_laplacian(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(nullity_multiplicities(l, Execution::Parallel));
}

void BM_NullitySerial(benchmark::State& state)
{
    const IntegerMatrix l = cscom_laplacian(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(nullity_multiplicities(l, Execution::Serial));
}

} // namespace

BENCHMARK(BM_CharPolyParallel)->Arg(4)->Arg(10)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharPolySerial)->Arg(4)->Arg(10)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharPolyBerkowitz)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharPolyOnePrime)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeterminantParallel)->Arg(4)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeterminantSerial)->Arg(4)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeterminantBareiss)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NullityParallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NullitySerial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
