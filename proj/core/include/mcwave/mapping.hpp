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
#include <cstdint>
#include <vector>

#include "mcwave/numerics.hpp"

namespace mcwave {

using Bits = std::vector<std::uint8_t>;

/// Constellation with a binary label per point: point i carries the bits of i, MSB first.
struct Alphabet {
    std::vector<Complex> points;
    std::size_t bits_per_symbol = 0;
    double energy = 1.0;

    std::size_t size() const noexcept { return points.size(); }

    /// Gray QPSK: 00 -> (1+j), 01 -> (1-j), 10 -> (-1+j), 11 -> (-1-j), all scaled by sqrt(Es/2).
    static Alphabet qpsk(double energy = 1.0);
};

ComplexVector map_bits(std::span<const std::uint8_t> bits, const Alphabet& alphabet);
ComplexVector map_indices(std::span<const std::size_t> indices, const Alphabet& alphabet);

/// Nearest point; ties go to the lowest index.
std::size_t nearest_index(Complex y, const Alphabet& alphabet);
std::vector<std::size_t> hard_indices(std::span<const Complex> symbols, const Alphabet& alphabet);
Bits hard_demap(std::span<const Complex> symbols, const Alphabet& alphabet);

/// Gaussian observations x_bar[l] sharing one variance.
struct SoftSymbolEnsemble {
    ComplexVector means;
    double variance = 0.0;
};

struct AppResult {
    ComplexVector means;
    std::vector<double> variances;
    /// Row-major, one row of alphabet.size() probabilities per position.
    std::vector<double> probs;
    std::size_t alphabet_size = 0;

    double prob(std::size_t position, std::size_t point) const { return probs[position * alphabet_size + point]; }
};

/// P(a | x_bar[l]) proportional to exp(-|x_bar[l] - a|^2 / variance) under a uniform prior.
/// A zero variance yields one-hot hard decisions with zero posterior variance.
AppResult app_detect(const SoftSymbolEnsemble& prior, const Alphabet& alphabet);

}  // namespace mcwave
