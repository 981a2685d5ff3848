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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mcwave/numerics.hpp"

namespace mcwave {

enum class Waveform { SC, OFDM, OTFS };

std::string_view to_string(Waveform w) noexcept;
/// Case-insensitive; throws ArgumentError on unknown names.
Waveform parse_waveform(std::string_view name);

/// Frame lengths for one waveform on a shared budget of M*N samples (OTFS adds one CP).
struct FrameGeometry {
    Waveform waveform = Waveform::SC;
    std::size_t M = 32;
    std::size_t N = 16;
    std::size_t l_cp = 3;

    void validate() const;

    std::size_t info_per_block() const noexcept { return waveform == Waveform::OTFS ? M * N : M - l_cp; }
    std::size_t block_count() const noexcept { return waveform == Waveform::OTFS ? 1 : N; }
    std::size_t total_cp() const noexcept { return l_cp * block_count(); }
    std::size_t info_symbols() const noexcept { return info_per_block() * block_count(); }
    std::size_t tx_len() const noexcept { return info_symbols() + total_cp(); }
    /// Transmitted length of one block including its prefix.
    std::size_t tx_block_len() const noexcept { return info_per_block() + l_cp; }
};

ComplexVector cp_add(std::span<const Complex> x, const FrameGeometry& geom);
ComplexVector cp_remove(std::span<const Complex> y, const FrameGeometry& geom);

std::vector<ComplexVector> block_split(std::span<const Complex> x, const FrameGeometry& geom);
ComplexVector concat(const std::vector<ComplexVector>& blocks);

}  // namespace mcwave
