// Serial reference kernels against their OpenMP counterparts on Boolean
// lattices. Arg(n) is the rank of the lattice; Arg(1) selects omp.

#include <benchmark/benchmark.h>

#include "incidence/kernels.hpp"
#include "incidence/sampling.hpp"

using namespace incidence;

namespace {

struct Fixture {
    PosetPtr poset;
    FieldSpec field = FieldSpec::rationals();
    std::vector<Scalar> f, g;
    std::vector<kernels::Column> a, b;

    explicit Fixture(std::size_t rank) : poset(make_boolean(rank)) {
        Rng rng(rank);
        const auto fv = random_function(poset, field, rng);
        const auto gv = random_function(poset, field, rng);
        f.assign(fv.values().begin(), fv.values().end());
        g.assign(gv.values().begin(), gv.values().end());
        a = random_coalgebra_endomap(poset, field, rng).columns();
        b = random_coalgebra_endomap(poset, field, rng).columns();
    }

    std::vector<Scalar> zero_vector() const { return std::vector<Scalar>(f.size(), Scalar::zero(field)); }
    std::vector<kernels::Column> zero_table() const {
        return std::vector<kernels::Column>(a.size(), zero_vector());
    }
};

void BM_Convolve(benchmark::State& state) {
    const Fixture fx(state.range(0));
    const bool parallel = state.range(1) != 0;
    for (auto _ : state) {
        auto out = fx.zero_vector();
        if (parallel) {
            kernels::omp::convolve(*fx.poset, fx.f, fx.g, out);
        } else {
            kernels::serial::convolve(*fx.poset, fx.f, fx.g, out);
        }
        benchmark::DoNotOptimize(out);
    }
}

void BM_Compose(benchmark::State& state) {
    const Fixture fx(state.range(0));
    const bool parallel = state.range(1) != 0;
    for (auto _ : state) {
        auto out = fx.zero_table();
        if (parallel) {
            kernels::omp::compose(fx.a, fx.b, out);
        } else {
            kernels::serial::compose(fx.a, fx.b, out);
        }
        benchmark::DoNotOptimize(out);
    }
}

// Every index is checked, as in the predicates when the map is valid.
void BM_FirstFailure(benchmark::State& state) {
    const Fixture fx(state.range(0));
    const bool parallel = state.range(1) != 0;
    const auto m = fx.a.size();
    const auto fails = [&](std::size_t i) {
        auto out = fx.zero_vector();
        kernels::serial::combine(fx.a[i], fx.b, out);
        return out.empty();
    };
    for (auto _ : state) {
        auto r = parallel ? kernels::omp::first_failure(m, fails) : kernels::serial::first_failure(m, fails);
        benchmark::DoNotOptimize(r);
    }
}

}  // namespace

BENCHMARK(BM_Convolve)->ArgsProduct({{3, 4, 5}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Compose)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FirstFailure)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
