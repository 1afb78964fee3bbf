#include <benchmark/benchmark.h>

#include "degseq/classification.hpp"
#include "degseq/dominance.hpp"
#include "degseq/envelope.hpp"
#include "degseq/graphicality.hpp"
#include "degseq/realization.hpp"
#include "degseq/sequence.hpp"

namespace {

// The staircase n-1, n-2, ..., 0: the largest threshold sequence on n.
degseq::degree_sequence staircase(int n) {
    degseq::int_list terms(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        terms[static_cast<size_t>(i)] = n - 1 - i;
    return degseq::validate_sequence(terms);
}

// Half-regular: every vertex of degree n/2 (n even makes the sum even).
degseq::degree_sequence half_regular(int n) {
    return degseq::validate_sequence(degseq::int_list(static_cast<size_t>(n), n / 2));
}

// The tower family: five tall terms, a widening middle band, a fixed base.
degseq::degree_sequence tower(int j) {
    degseq::int_list terms;
    terms.insert(terms.end(), 5, 15 + 2 * j);
    terms.insert(terms.end(), static_cast<size_t>(7 + 2 * j), 6);
    terms.insert(terms.end(), 7, 3);
    return degseq::validate_sequence(terms);
}

void bm_eg_profile(benchmark::State& state) {
    const degseq::degree_sequence d = staircase(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(degseq::compute_eg_profile(d));
}
BENCHMARK(bm_eg_profile)->Arg(1000)->Arg(10000)->Arg(100000);

void bm_classify_deltas(benchmark::State& state) {
    const degseq::degree_sequence d = half_regular(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            degseq::classify_pairs(d, degseq::classify_method::deltas));
}
BENCHMARK(bm_classify_deltas)->Arg(16)->Arg(64)->Arg(256);

void bm_classify_graphicality(benchmark::State& state) {
    const degseq::degree_sequence d = half_regular(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            degseq::classify_pairs(d, degseq::classify_method::graphicality));
}
BENCHMARK(bm_classify_graphicality)->Arg(16)->Arg(64)->Arg(256);

void bm_envelopes(benchmark::State& state) {
    const degseq::degree_sequence d = half_regular(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(degseq::intersection_envelope(d));
        benchmark::DoNotOptimize(degseq::union_envelope(d));
    }
}
BENCHMARK(bm_envelopes)->Arg(16)->Arg(64)->Arg(256);

void bm_enumerate(benchmark::State& state) {
    const degseq::degree_sequence d = half_regular(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(degseq::enumerate_realizations(d, 8));
}
BENCHMARK(bm_enumerate)->Arg(4)->Arg(6)->Arg(8);

void bm_lift(benchmark::State& state) {
    const degseq::degree_sequence s = tower(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(degseq::lift_to_decomposable(s));
}
BENCHMARK(bm_lift)->Arg(0)->Arg(2)->Arg(8);

} // namespace

BENCHMARK_MAIN();
