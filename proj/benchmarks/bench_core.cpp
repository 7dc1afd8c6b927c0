// Copyright 2026 The qmat developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "qmat/arith.hpp"
#include "qmat/qcoin.hpp"
#include "qmat/qmatrix.hpp"
#include "qmat/state_vector.hpp"

using namespace qmat;

namespace {

void BM_Hadamard(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    StateVector s(n);
    for (auto _ : state) {
        s.apply(GateOp::h(n / 2));
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(s.size()));
}
BENCHMARK(BM_Hadamard)->Arg(12)->Arg(16)->Arg(20);

void BM_MultiControlledX(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    StateVector s(n);
    GateOp g = GateOp::x(0);
    for (std::size_t q = 1; q < n; ++q) {
        g.controlled(q);
    }
    for (auto _ : state) {
        s.apply(g);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(s.size()));
}
BENCHMARK(BM_MultiControlledX)->Arg(12)->Arg(16)->Arg(20);

void BM_LoadPointwise(benchmark::State& state) {
    const auto bits = static_cast<std::size_t>(state.range(0));
    const RegisterLayout layout = RegisterLayout::standard(bits, bits);
    std::mt19937_64 rng(1);
    ClassicalMatrix f(layout.rows(), layout.cols());
    for (std::size_t i = 0; i < f.rows(); ++i) {
        for (std::size_t j = 0; j < f.cols(); ++j) {
            f.at(i, j) = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
        }
    }
    for (auto _ : state) {
        StateVector s = init_uniform(layout);
        load_pointwise(s, layout, f);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
}
BENCHMARK(BM_LoadPointwise)->Arg(2)->Arg(3)->Arg(4);

void BM_ReduceRows(benchmark::State& state) {
    const auto bits = static_cast<std::size_t>(state.range(0));
    const RegisterLayout layout = RegisterLayout::standard(2, bits);
    for (auto _ : state) {
        StateVector s = init_uniform(layout);
        reduce_rows(s, layout);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
}
BENCHMARK(BM_ReduceRows)->Arg(8)->Arg(12)->Arg(16);

void BM_GroverIteration(benchmark::State& state) {
    const Preparation prep = Preparation::amplitude_state(0.02);
    const GroverOperator grover(prep, full_pattern(0, 1), full_pattern(1, 1));
    StateVector s = prep.prepare();
    for (auto _ : state) {
        grover.apply(s);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
}
BENCHMARK(BM_GroverIteration);

void BM_QCoinStage(benchmark::State& state) {
    const Preparation prep = Preparation::amplitude_state(0.3);
    const BasisPattern chi = BasisPattern{}.set(0, true);
    QCoinConfig cfg;
    cfg.shots_per_stage = 2000;
    cfg.stages = 2;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        cfg.seed = seed++;
        benchmark::DoNotOptimize(qcoin_estimate(prep, chi, cfg).final_half_width);
    }
}
BENCHMARK(BM_QCoinStage);

}  // namespace

BENCHMARK_MAIN();
