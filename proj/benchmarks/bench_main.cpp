#include "netreal/binmat.hpp"
#include "netreal/line_digraph.hpp"
#include "netreal/realize.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace netreal;

// Line digraph adjacency of a directed cycle with n arcs: arc j feeds arc j+1.
BinaryMatrix ring_adjacency(int n) {
    BinaryMatrix a(n, n);
    for (int j = 0; j < n; ++j)
        a.set((j + 1) % n, j, 1);
    return a;
}

BinaryMatrix banded_symmetric(int n) {
    BinaryMatrix s(n, n);
    for (int i = 0; i < n; ++i) {
        s.set(i, i, 1);
        if (i + 1 < n) {
            s.set(i, i + 1, 1);
            s.set(i + 1, i, 1);
        }
    }
    return s;
}

BoundarySystem worked_system() {
    BoundarySystem system;
    system.m = 3;
    system.xi_out = RealMatrix::from_int_rows({
        {0, 1, 1, 0, 0, 0},
        {1, 0, 0, 0, 0, 0},
        {1, 1, 0, 0, 0, 0},
        {0, 0, 1, 1, 0, 0},
        {0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 1},
    });
    system.xi_in = RealMatrix::from_int_rows({
        {0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0},
        {-1, -1, 0, 0, 0, -1},
        {0, 0, -1, -1, -1, 0},
    });
    system.j_plus = IndexSet{0, 1, 2, 3, 4};
    system.j_minus = IndexSet{5};
    for (int c : {4, 2, 3, 1, 2, 1})
        system.speeds.push_back(Scalar::integer(c));
    system.tol = 0.0;
    return system;
}

void BM_RecognizeRing(benchmark::State& state) {
    BinaryMatrix a = ring_adjacency(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto verdict = recognize_line_digraph(a);
        benchmark::DoNotOptimize(verdict);
    }
}
BENCHMARK(BM_RecognizeRing)->Arg(32)->Arg(128)->Arg(512);

void BM_BuildClassesRing(benchmark::State& state) {
    BinaryMatrix a = ring_adjacency(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        ClassStructure cs = build_classes(a);
        benchmark::DoNotOptimize(cs);
    }
}
BENCHMARK(BM_BuildClassesRing)->Arg(32)->Arg(128);

void BM_IrreducibleComponents(benchmark::State& state) {
    BinaryMatrix s = banded_symmetric(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto components = irreducible_components(s);
        benchmark::DoNotOptimize(components);
    }
}
BENCHMARK(BM_IrreducibleComponents)->Arg(64)->Arg(256);

void BM_RealizeWorkedExample(benchmark::State& state) {
    BoundarySystem system = worked_system();
    for (auto _ : state) {
        RealizeOutcome outcome = realize(system);
        benchmark::DoNotOptimize(outcome);
    }
}
BENCHMARK(BM_RealizeWorkedExample);

void BM_SinkPairings(benchmark::State& state) {
    std::vector<int> arcs;
    for (int i = 0; i < state.range(0); ++i)
        arcs.push_back(i);
    for (auto _ : state) {
        SinkPartitionEnumerator enumerator({IndexSet(arcs)}, true);
        SinkPartition candidate;
        long long count = 0;
        while (enumerator.next(candidate))
            ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_SinkPairings)->Arg(8)->Arg(10);

} // namespace

BENCHMARK_MAIN();
