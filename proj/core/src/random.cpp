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

#include "mcwave/random.hpp"

#include <array>

namespace mcwave {

Rng make_stream(std::uint64_t seed, std::uint64_t frame, StreamId stream, std::uint64_t sub) {
    // seed_seq's mixing is fixed by the standard, so streams are portable across toolchains.
    const std::array<std::uint32_t, 7> words{
        static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(frame), static_cast<std::uint32_t>(frame >> 32),
        static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(sub),
        static_cast<std::uint32_t>(sub >> 32)};
    std::seed_seq seq(words.begin(), words.end());
    return Rng(seq);
}

}  // namespace mcwave
