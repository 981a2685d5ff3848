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

#include "mcwave/framing.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "mcwave/errors.hpp"

namespace mcwave {

std::string_view to_string(Waveform w) noexcept {
    switch (w) {
        case Waveform::SC: return "SC";
        case Waveform::OFDM: return "OFDM";
        case Waveform::OTFS: return "OTFS";
    }
    return "?";
}

Waveform parse_waveform(std::string_view name) {
    std::string up(name);
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (up == "SC") return Waveform::SC;
    if (up == "OFDM") return Waveform::OFDM;
    if (up == "OTFS") return Waveform::OTFS;
    throw ArgumentError("unknown waveform '" + std::string(name) + "'");
}

void FrameGeometry::validate() const {
    if (M == 0 || N == 0) throw ArgumentError("frame: M and N must be positive");
    if (l_cp >= M) throw ArgumentError("frame: l_cp must be smaller than M");
}

ComplexVector cp_add(std::span<const Complex> x, const FrameGeometry& geom) {
    geom.validate();
    const std::size_t len = geom.info_per_block();
    if (x.size() != geom.info_symbols()) {
        throw DimensionError("cp_add: expected " + std::to_string(geom.info_symbols()) + " symbols, got " +
                             std::to_string(x.size()));
    }
    ComplexVector out;
    out.reserve(geom.tx_len());
    for (std::size_t b = 0; b < geom.block_count(); ++b) {
        const auto block = x.subspan(b * len, len);
        out.insert(out.end(), block.end() - static_cast<std::ptrdiff_t>(geom.l_cp), block.end());
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

ComplexVector cp_remove(std::span<const Complex> y, const FrameGeometry& geom) {
    geom.validate();
    if (y.size() != geom.tx_len()) {
        throw DimensionError("cp_remove: expected " + std::to_string(geom.tx_len()) + " samples, got " +
                             std::to_string(y.size()));
    }
    const std::size_t len = geom.info_per_block();
    const std::size_t stride = geom.tx_block_len();
    ComplexVector out;
    out.reserve(geom.info_symbols());
    for (std::size_t b = 0; b < geom.block_count(); ++b) {
        const auto block = y.subspan(b * stride + geom.l_cp, len);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::vector<ComplexVector> block_split(std::span<const Complex> x, const FrameGeometry& geom) {
    const std::size_t count = geom.block_count();
    if (count == 0 || x.size() % count != 0) {
        throw DimensionError("block_split: length " + std::to_string(x.size()) + " not divisible into " +
                             std::to_string(count) + " blocks");
    }
    const std::size_t len = x.size() / count;
    std::vector<ComplexVector> blocks;
    blocks.reserve(count);
    for (std::size_t b = 0; b < count; ++b) blocks.emplace_back(x.begin() + b * len, x.begin() + (b + 1) * len);
    return blocks;
}

ComplexVector concat(const std::vector<ComplexVector>& blocks) {
    ComplexVector out;
    for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace mcwave
