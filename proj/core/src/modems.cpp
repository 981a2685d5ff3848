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

#include "mcwave/modems.hpp"

#include <string>

#include "mcwave/errors.hpp"

namespace mcwave {

namespace {

void check_info(std::span<const Complex> x, const FrameGeometry& geom, Waveform expected, const char* op) {
    geom.validate();
    if (geom.waveform != expected) throw ArgumentError(std::string(op) + ": geometry is for " + std::string(to_string(geom.waveform)));
    if (x.size() != geom.info_symbols()) {
        throw DimensionError(std::string(op) + ": expected " + std::to_string(geom.info_symbols()) + " symbols, got " +
                             std::to_string(x.size()));
    }
}

}  // namespace

TxFrame sc_transmit(std::span<const Complex> x, const FrameGeometry& geom) {
    check_info(x, geom, Waveform::SC, "sc_transmit");
    return {geom, ComplexVector(x.begin(), x.end()), cp_add(x, geom)};
}

TxFrame ofdm_transmit(std::span<const Complex> x, const FrameGeometry& geom) {
    check_info(x, geom, Waveform::OFDM, "ofdm_transmit");
    const std::size_t len = geom.info_per_block();
    ComplexVector time(x.size());
    for (std::size_t b = 0; b < geom.block_count(); ++b) {
        const auto block = idft(x.subspan(b * len, len), len);
        std::copy(block.begin(), block.end(), time.begin() + static_cast<std::ptrdiff_t>(b * len));
    }
    return {geom, ComplexVector(x.begin(), x.end()), cp_add(time, geom)};
}

TxFrame otfs_transmit(std::span<const Complex> x, const FrameGeometry& geom) {
    check_info(x, geom, Waveform::OTFS, "otfs_transmit");
    const auto s = doppler_transform(x, geom.M, geom.N, TransformDirection::Inverse);
    return {geom, ComplexVector(x.begin(), x.end()), cp_add(s, geom)};
}

TxFrame transmit(std::span<const Complex> x, const FrameGeometry& geom) {
    switch (geom.waveform) {
        case Waveform::SC: return sc_transmit(x, geom);
        case Waveform::OFDM: return ofdm_transmit(x, geom);
        case Waveform::OTFS: return otfs_transmit(x, geom);
    }
    throw ArgumentError("transmit: unknown waveform");
}

ComplexMatrix fold_cyclic_prefix(const ComplexMatrix& block, std::size_t l_cp) {
    if (block.rows() != block.cols() || block.rows() <= l_cp) throw DimensionError("fold_cyclic_prefix: bad block shape");
    const std::size_t L = block.rows() - l_cp;
    ComplexMatrix out(L, L);
    for (std::size_t i = 0; i < L; ++i) {
        for (std::size_t j = 0; j < L; ++j) {
            Complex v = block(i + l_cp, j + l_cp);
            if (j + l_cp >= L) v += block(i + l_cp, j + l_cp - L);
            out(i, j) = v;
        }
    }
    return out;
}

RxChannels prepare_rx_channels(const EffectiveChannelMatrix& G, const FrameGeometry& geom,
                               bool materialize_otfs_frequency) {
    geom.validate();
    if (G.size() != geom.tx_len()) {
        throw DimensionError("prepare_rx_channels: channel size " + std::to_string(G.size()) + " != tx_len " +
                             std::to_string(geom.tx_len()));
    }
    RxChannels ch;
    ch.geom = geom;
    const std::size_t stride = geom.tx_block_len();
    if (geom.waveform == Waveform::OTFS) {
        const auto folded = fold_cyclic_prefix(G.matrix, geom.l_cp);
        ch.otfs_time = SparseMatrix::from_dense(folded);
        if (materialize_otfs_frequency) ch.otfs_freq = conjugate_by_dft(folded);
        return ch;
    }
    ch.block_time.reserve(geom.block_count());
    ch.block_freq.reserve(geom.block_count());
    for (std::size_t b = 0; b < geom.block_count(); ++b) {
        ch.block_time.push_back(fold_cyclic_prefix(G.matrix.diagonal_block(b * stride, stride), geom.l_cp));
        ch.block_freq.push_back(conjugate_by_dft(ch.block_time.back()));
    }
    return ch;
}

RxFrame receive_front_end(std::span<const Complex> y, const FrameGeometry& geom,
                          std::shared_ptr<const RxChannels> channels) {
    if (!channels) throw ArgumentError("receive_front_end: missing channel matrices");
    if (channels->geom.waveform != geom.waveform || channels->geom.tx_len() != geom.tx_len()) {
        throw ArgumentError("receive_front_end: channels prepared for a different geometry");
    }
    RxFrame rx;
    rx.geom = geom;
    rx.stripped = cp_remove(y, geom);
    rx.channels = std::move(channels);
    if (geom.waveform == Waveform::OTFS) {
        rx.domain_vectors.push_back(doppler_transform(rx.stripped, geom.M, geom.N, TransformDirection::Forward));
        rx.otfs_frequency = dft(rx.stripped, rx.stripped.size());
        return rx;
    }
    const std::size_t len = geom.info_per_block();
    for (auto& block : block_split(rx.stripped, geom)) rx.domain_vectors.push_back(dft(block, len));
    return rx;
}

RxFrame receive_front_end(std::span<const Complex> y, const FrameGeometry& geom, const EffectiveChannelMatrix& G) {
    return receive_front_end(y, geom, std::make_shared<const RxChannels>(prepare_rx_channels(G, geom, true)));
}

}  // namespace mcwave
