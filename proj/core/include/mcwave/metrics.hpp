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

#include "mcwave/mapping.hpp"
#include "mcwave/numerics.hpp"

namespace mcwave {

/// x_hat ~ alpha x + CN(0, sigma2).
struct AuxChannelModel {
    Complex alpha{0.0, 0.0};
    double sigma2 = 0.0;
};

inline constexpr double kAuxVarianceFloor = 1e-12;

/// Least-squares gain and residual power; throws DegenerateError when x carries no energy.
AuxChannelModel fit_aux_channel(std::span<const Complex> x, std::span<const Complex> x_hat);

/// Symbol-level GMI in bits/symbol of the fitted auxiliary channel with uniform inputs,
/// clipped to [0, bits_per_symbol]. Returns 0 when the fit is degenerate.
double pragmatic_capacity(std::span<const Complex> x, std::span<const Complex> x_hat, const Alphabet& alphabet);

/// Fraction of positions whose nearest point differs from the transmitted one.
double symbol_error_rate(std::span<const Complex> x, std::span<const Complex> x_hat, const Alphabet& alphabet);

}  // namespace mcwave
