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
#include <filesystem>
#include <string>
#include <string_view>

namespace mcwave {

/// tiny: M = 4, N = 4. small: M = 8, N = 4. Both use l_cp = 1 and two APs.
enum class FixtureScale { Tiny, Small };

FixtureScale parse_fixture_scale(std::string_view name);
std::string_view to_string(FixtureScale scale) noexcept;

/// Self-describing JSON: links, channel matrices per waveform and a step-by-step CDID trace.
/// Complex numbers are [re, im] pairs, matrices are arrays of rows.
std::string generate_fixture_json(FixtureScale scale, std::uint64_t seed);

/// Writes `<dir>/fixture_<scale>_<seed>.json` and returns its path.
std::filesystem::path write_fixture(FixtureScale scale, std::uint64_t seed, const std::filesystem::path& dir);

}  // namespace mcwave
