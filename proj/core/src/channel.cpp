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

#include "mcwave/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "mcwave/errors.hpp"

namespace mcwave {

void ChannelParams::validate() const {
    if (!(q >= 0.0 && q <= 1.0)) throw ArgumentError("channel.q must lie in [0, 1]");
    if (!(tau_max >= 0.0) || !std::isfinite(tau_max)) throw ArgumentError("channel.tau_max must be >= 0");
    if (!(nu_max >= 0.0) || !std::isfinite(nu_max)) throw ArgumentError("channel.nu_max must be >= 0");
    if (m_ap == 0) throw ArgumentError("channel.m_ap must be positive");
}

ChannelRealization sample_links(const ChannelParams& params, Rng& rng) { return sample_links(params, rng, rng); }

ChannelRealization sample_links(const ChannelParams& params, Rng& blockage, Rng& offsets) {
    params.validate();
    std::bernoulli_distribution block(params.q);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    ChannelRealization out;
    out.links.reserve(params.m_ap);
    for (std::size_t i = 0; i < params.m_ap; ++i) {
        LinkState link;
        link.blocked = block(blockage);
        link.tau = params.tau_max * unit(offsets);
        link.nu = params.nu_max * (2.0 * unit(offsets) - 1.0);
        out.links.push_back(link);
    }
    return out;
}

ChannelRealization precompensate(const ChannelRealization& realization, const Precompensation& hook) {
    if (!hook) return realization;
    ChannelRealization out = realization;
    for (std::size_t i = 0; i < out.links.size(); ++i) out.links[i] = hook(realization.links[i], i);
    return out;
}

Complex effective_gain(const LinkState& link, long m, long n, const PulseShape& pulse, std::size_t M) {
    if (M == 0) throw ArgumentError("effective_gain: M must be positive");
    if (link.blocked) return {0.0, 0.0};
    const double nu = link.nu / static_cast<double>(M);
    const Complex amb = ambiguity(pulse, static_cast<double>(n - m) + link.tau, nu);
    if (amb == Complex{0.0, 0.0}) return amb;
    const double ph = 2.0 * std::numbers::pi * static_cast<double>(n) * nu;
    return Complex(std::cos(ph), std::sin(ph)) * std::conj(amb);
}

ComplexVector EffectiveChannelMatrix::apply(std::span<const Complex> x) const {
    const std::size_t n = size();
    if (x.size() != n) throw DimensionError("EffectiveChannelMatrix::apply: length mismatch");
    ComplexVector y(n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t c0 = r > lower ? r - lower : 0;
        const std::size_t c1 = std::min(n, r + upper + 1);
        Complex acc{0.0, 0.0};
        for (std::size_t c = c0; c < c1; ++c) acc += matrix(r, c) * x[c];
        y[r] = acc;
    }
    return y;
}

EffectiveChannelMatrix build_channel_matrix(const ChannelRealization& realization, std::size_t length,
                                            const PulseShape& pulse, std::size_t M) {
    if (length == 0) throw ArgumentError("build_channel_matrix: length must be positive");
    if (M == 0) throw ArgumentError("build_channel_matrix: M must be positive");
    pulse.validate();
    EffectiveChannelMatrix out;
    out.matrix = ComplexMatrix(length, length);
    const double support = pulse.support();
    const auto len = static_cast<long>(length);
    for (const auto& link : realization.links) {
        if (link.blocked) continue;
        if (!std::isfinite(link.tau) || !std::isfinite(link.nu)) throw ArgumentError("build_channel_matrix: non-finite offset");
        const double nu = link.nu / static_cast<double>(M);
        // Column offset k = n - m contributes while |k + tau| <= support.
        const auto k_lo = std::max(static_cast<long>(std::ceil(-support - link.tau)), -(len - 1));
        const auto k_hi = std::min(static_cast<long>(std::floor(support - link.tau)), len - 1);
        for (long k = k_lo; k <= k_hi; ++k) {
            const Complex amb = std::conj(ambiguity(pulse, static_cast<double>(k) + link.tau, nu));
            if (amb == Complex{0.0, 0.0}) continue;
            if (k < 0) out.lower = std::max(out.lower, static_cast<std::size_t>(-k));
            if (k > 0) out.upper = std::max(out.upper, static_cast<std::size_t>(k));
            const long m0 = std::max(0L, -k);
            const long m1 = std::min(len, len - k);
            for (long m = m0; m < m1; ++m) {
                const long n = m + k;
                const double ph = 2.0 * std::numbers::pi * static_cast<double>(n) * nu;
                out.matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n)) +=
                    Complex(std::cos(ph), std::sin(ph)) * amb;
            }
        }
    }
    return out;
}

ComplexVector add_awgn(std::span<const Complex> signal, double N0, Rng& rng) {
    if (!(N0 >= 0.0) || !std::isfinite(N0)) throw ArgumentError("add_awgn: N0 must be finite and >= 0");
    ComplexVector out(signal.begin(), signal.end());
    if (N0 == 0.0) return out;
    std::normal_distribution<double> gauss(0.0, std::sqrt(N0 / 2.0));
    for (auto& v : out) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v += Complex(re, im);
    }
    return out;
}

}  // namespace mcwave
