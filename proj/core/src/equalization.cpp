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

#include "mcwave/equalization.hpp"

#include <cmath>

#include "mcwave/errors.hpp"

namespace mcwave {

namespace {

void check_noise(double N0, double Es) {
    if (!(N0 >= 0.0) || !std::isfinite(N0)) throw ArgumentError("mmse: N0 must be finite and >= 0");
    if (!(Es > 0.0)) throw ArgumentError("mmse: Es must be positive");
}

ComplexVector equalize_blocks(const RxFrame& rx, double N0, double Es, Waveform expected, bool to_time) {
    if (rx.geom.waveform != expected || !rx.channels) throw ArgumentError("equalize: waveform mismatch");
    const auto& H = rx.channels->block_freq;
    if (H.size() != rx.domain_vectors.size()) throw DimensionError("equalize: block count mismatch");
    std::vector<ComplexVector> blocks;
    blocks.reserve(H.size());
    for (std::size_t b = 0; b < H.size(); ++b) {
        const auto w = mmse_weights(H[b], N0, Es);
        const auto& y = rx.domain_vectors[b];
        if (y.size() != w.size()) throw DimensionError("equalize: block length mismatch");
        ComplexVector est(y.size());
        for (std::size_t l = 0; l < y.size(); ++l) est[l] = w[l] * y[l];
        blocks.push_back(to_time ? idft(est, est.size()) : std::move(est));
    }
    return concat(blocks);
}

}  // namespace

ComplexVector mmse_weights(const ComplexMatrix& H, double N0, double Es) {
    check_noise(N0, Es);
    if (H.rows() != H.cols()) throw DimensionError("mmse_weights: H must be square");
    ComplexVector w(H.rows());
    for (std::size_t l = 0; l < H.rows(); ++l) {
        double row = 0.0;
        for (const auto& v : H.row(l)) row += std::norm(v);
        const double den = Es * row + N0;
        w[l] = den > 0.0 ? Es * std::conj(H(l, l)) / den : Complex{0.0, 0.0};
    }
    return w;
}

ComplexVector equalize_sc(const RxFrame& rx, double N0, double Es) {
    return equalize_blocks(rx, N0, Es, Waveform::SC, true);
}

ComplexVector equalize_ofdm(const RxFrame& rx, double N0, double Es) {
    return equalize_blocks(rx, N0, Es, Waveform::OFDM, false);
}

}  // namespace mcwave
