// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The mcwave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>

#include "mcwave/mcwave.hpp"

namespace {

struct Frame {
    mcwave::FrameGeometry geom;
    mcwave::RxFrame rx;
    double N0;
};

Frame make_frame(mcwave::Waveform w, std::size_t N) {
    mcwave::RunConfig cfg;
    cfg.N = N;
    cfg.channel.q = 0.0;
    const mcwave::FrameSimulator sim(cfg);
    const auto draw = sim.draw(0);
    const auto geom = cfg.geometry(w);
    const auto G = mcwave::build_channel_matrix(draw.realization, geom.tx_len(), cfg.pulse, cfg.M);
    const auto idx = std::span(draw.symbol_indices).first(geom.info_symbols());
    const auto x = mcwave::map_indices(idx, mcwave::Alphabet::qpsk());
    const double N0 = mcwave::noise_density(10.0);
    auto rng = mcwave::make_stream(cfg.seed, 0, mcwave::StreamId::Noise, 0);
    const auto y = mcwave::add_awgn(G.apply(mcwave::transmit(x, geom).tx_samples), N0, rng);
    return {geom, mcwave::receive_front_end(y, geom, G), N0};
}

void BM_FdeSc(benchmark::State& state) {
    const auto f = make_frame(mcwave::Waveform::SC, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mcwave::equalize_sc(f.rx, f.N0));
}
BENCHMARK(BM_FdeSc)->Arg(4)->Arg(16);

void BM_FdeOfdm(benchmark::State& state) {
    const auto f = make_frame(mcwave::Waveform::OFDM, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mcwave::equalize_ofdm(f.rx, f.N0));
}
BENCHMARK(BM_FdeOfdm)->Arg(4)->Arg(16);

void BM_Cdid(benchmark::State& state) {
    const auto f = make_frame(mcwave::Waveform::OTFS, static_cast<std::size_t>(state.range(0)));
    const mcwave::TimeDomainFrequencyChannel H(f.rx.channels->otfs_time);
    mcwave::CdidConfig cfg;
    cfg.max_iterations = static_cast<std::size_t>(state.range(1));
    cfg.tolerance = 0.0;
    const auto A = mcwave::Alphabet::qpsk();
    for (auto _ : state)
        benchmark::DoNotOptimize(mcwave::run_cdid(f.rx.otfs_frequency, H, f.geom.M, f.geom.N, A, f.N0, cfg));
}
BENCHMARK(BM_Cdid)->Args({4, 1})->Args({16, 1})->Args({16, 8});

void BM_Frame(benchmark::State& state) {
    mcwave::RunConfig cfg;
    cfg.snr_grid_db = {10};
    const mcwave::FrameSimulator sim(cfg);
    std::size_t f = 0;
    for (auto _ : state) benchmark::DoNotOptimize(sim.run_frame(f++));
}
BENCHMARK(BM_Frame)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
