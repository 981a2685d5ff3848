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

#pragma once

#include <memory>
#include <vector>

#include "mcwave/channel.hpp"
#include "mcwave/framing.hpp"
#include "mcwave/numerics.hpp"

namespace mcwave {

struct TxFrame {
    FrameGeometry geom;
    ComplexVector info_symbols;
    ComplexVector tx_samples;
};

TxFrame sc_transmit(std::span<const Complex> x, const FrameGeometry& geom);
TxFrame ofdm_transmit(std::span<const Complex> x, const FrameGeometry& geom);
TxFrame otfs_transmit(std::span<const Complex> x, const FrameGeometry& geom);
/// Dispatches on geom.waveform.
TxFrame transmit(std::span<const Complex> x, const FrameGeometry& geom);

/// R G A for one block of length n = L + l_cp: rows and columns of the prefix are folded onto the
/// block tail, giving the L x L map from information samples to CP-stripped samples.
ComplexMatrix fold_cyclic_prefix(const ComplexMatrix& block, std::size_t l_cp);

/// Channel matrices seen by the detectors. They depend on the realization only, so one instance
/// serves every SNR point of a frame.
struct RxChannels {
    FrameGeometry geom;
    /// SC/OFDM: per-block folded time-domain matrices and their DFT conjugates H^(n).
    std::vector<ComplexMatrix> block_time;
    std::vector<ComplexMatrix> block_freq;
    /// OTFS: folded MN x MN time-domain matrix.
    SparseMatrix otfs_time;
    /// OTFS: F G_OTFS F^H, only filled when requested.
    ComplexMatrix otfs_freq;
};

RxChannels prepare_rx_channels(const EffectiveChannelMatrix& G, const FrameGeometry& geom,
                               bool materialize_otfs_frequency = false);

struct RxFrame {
    FrameGeometry geom;
    /// SC: q^(n) per block. OFDM: y^(n) per block. OTFS: the single DD vector.
    std::vector<ComplexVector> domain_vectors;
    /// CP-stripped time samples.
    ComplexVector stripped;
    /// OTFS only: F_MN applied to the stripped samples.
    ComplexVector otfs_frequency;
    std::shared_ptr<const RxChannels> channels;
};

RxFrame receive_front_end(std::span<const Complex> y, const FrameGeometry& geom,
                          std::shared_ptr<const RxChannels> channels);
RxFrame receive_front_end(std::span<const Complex> y, const FrameGeometry& geom, const EffectiveChannelMatrix& G);

}  // namespace mcwave
