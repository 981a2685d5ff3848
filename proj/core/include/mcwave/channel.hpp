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
#include <functional>
#include <vector>

#include "mcwave/numerics.hpp"
#include "mcwave/pulse.hpp"
#include "mcwave/random.hpp"

namespace mcwave {

/// One AP-to-UE link. `tau` is in T_s, `nu` in units of the subcarrier spacing 1/(M T_s).
struct LinkState {
    bool blocked = false;
    double tau = 0.0;
    double nu = 0.0;

    double gain() const noexcept { return blocked ? 0.0 : 1.0; }
};

struct ChannelParams {
    double q = 0.2;
    double tau_max = 3.0;
    double nu_max = 0.015;
    std::size_t m_ap = 4;

    void validate() const;
};

struct ChannelRealization {
    std::vector<LinkState> links;
    std::uint64_t rng_seed = 0;
};

/// Draws blockage and offsets for every AP from one generator.
ChannelRealization sample_links(const ChannelParams& params, Rng& rng);
/// Blockage and offsets from separate streams; offsets are drawn for blocked links too, so
/// changing q never shifts the offset sequence.
ChannelRealization sample_links(const ChannelParams& params, Rng& blockage, Rng& offsets);

/// Residual-offset correction applied per AP before the channel is built.
using Precompensation = std::function<LinkState(const LinkState& link, std::size_t ap)>;

/// Identity unless a hook is supplied.
ChannelRealization precompensate(const ChannelRealization& realization, const Precompensation& hook = {});

/// g_{m,n} = h e^{j 2 pi n nu / M} conj(A_p(n - m + tau, nu / M)).
Complex effective_gain(const LinkState& link, long m, long n, const PulseShape& pulse, std::size_t M);

/// Sum over APs of the per-link coefficient matrices on the transmitted-sample grid.
struct EffectiveChannelMatrix {
    ComplexMatrix matrix;
    /// Entries with m - n > lower or n - m > upper are exactly zero.
    std::size_t lower = 0;
    std::size_t upper = 0;

    std::size_t size() const noexcept { return matrix.rows(); }
    ComplexVector apply(std::span<const Complex> x) const;
};

EffectiveChannelMatrix build_channel_matrix(const ChannelRealization& realization, std::size_t length,
                                            const PulseShape& pulse, std::size_t M);

/// Adds i.i.d. CN(0, N0) samples.
ComplexVector add_awgn(std::span<const Complex> signal, double N0, Rng& rng);

}  // namespace mcwave
