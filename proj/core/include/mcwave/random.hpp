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

#include <cstdint>
#include <random>

namespace mcwave {

using Rng = std::mt19937_64;

/// Sub-streams drawn inside one frame. Every waveform in a frame reuses the same streams.
enum class StreamId : std::uint32_t {
    Bits = 1,
    Blockage = 2,
    Offsets = 3,
    Noise = 4,
};

/// Deterministic generator for (master seed, frame, stream, sub-index). `sub` separates
/// draws that must not overlap within a frame, e.g. the noise of each SNR point.
Rng make_stream(std::uint64_t seed, std::uint64_t frame, StreamId stream, std::uint64_t sub = 0);

}  // namespace mcwave
