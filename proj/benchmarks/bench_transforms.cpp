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

#include <random>

#include "mcwave/mcwave.hpp"

namespace {

mcwave::ComplexVector noise(std::size_t n) {
    std::mt19937_64 rng(n);
    std::normal_distribution<double> d;
    mcwave::ComplexVector v(n);
    for (auto& e : v) e = {d(rng), d(rng)};
    return v;
}

void BM_Dft(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto x = noise(n);
    for (auto _ : state) benchmark::DoNotOptimize(mcwave::dft(x, n));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dft)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_DftDense(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto x = noise(n);
    for (auto _ : state) benchmark::DoNotOptimize(mcwave::dft_dense(x, n));
}
BENCHMARK(BM_DftDense)->RangeMultiplier(4)->Range(16, 1024);

void BM_DopplerTransform(benchmark::State& state) {
    const std::size_t M = 32;
    const auto N = static_cast<std::size_t>(state.range(0));
    const auto x = noise(M * N);
    for (auto _ : state)
        benchmark::DoNotOptimize(mcwave::doppler_transform(x, M, N, mcwave::TransformDirection::Forward));
}
BENCHMARK(BM_DopplerTransform)->Arg(4)->Arg(16)->Arg(64);

void BM_ChannelMatrix(benchmark::State& state) {
    mcwave::ChannelParams params;
    params.q = 0.0;
    mcwave::Rng rng(5);
    const auto r = mcwave::sample_links(params, rng);
    const auto len = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mcwave::build_channel_matrix(r, len, mcwave::PulseShape{}, 32));
}
BENCHMARK(BM_ChannelMatrix)->Arg(128)->Arg(515);

}  // namespace
