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

#include "mcwave/mapping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mcwave/errors.hpp"

namespace mcwave {

Alphabet Alphabet::qpsk(double energy) {
    if (!(energy > 0.0)) throw ArgumentError("qpsk: energy must be positive");
    const double a = std::sqrt(energy / 2.0);
    return Alphabet{{{a, a}, {a, -a}, {-a, a}, {-a, -a}}, 2, energy};
}

ComplexVector map_bits(std::span<const std::uint8_t> bits, const Alphabet& alphabet) {
    const std::size_t k = alphabet.bits_per_symbol;
    if (k == 0 || bits.size() % k != 0) {
        throw ArgumentError("map_bits: " + std::to_string(bits.size()) + " bits not divisible by " + std::to_string(k));
    }
    ComplexVector out(bits.size() / k);
    for (std::size_t s = 0; s < out.size(); ++s) {
        std::size_t idx = 0;
        for (std::size_t b = 0; b < k; ++b) idx = (idx << 1) | (bits[s * k + b] & 1U);
        out[s] = alphabet.points.at(idx);
    }
    return out;
}

ComplexVector map_indices(std::span<const std::size_t> indices, const Alphabet& alphabet) {
    ComplexVector out(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) out[i] = alphabet.points.at(indices[i]);
    return out;
}

std::size_t nearest_index(Complex y, const Alphabet& alphabet) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
        const double d = std::norm(y - alphabet.points[a]);
        if (d < best_d) {
            best_d = d;
            best = a;
        }
    }
    return best;
}

std::vector<std::size_t> hard_indices(std::span<const Complex> symbols, const Alphabet& alphabet) {
    std::vector<std::size_t> out(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) out[i] = nearest_index(symbols[i], alphabet);
    return out;
}

Bits hard_demap(std::span<const Complex> symbols, const Alphabet& alphabet) {
    const std::size_t k = alphabet.bits_per_symbol;
    Bits out(symbols.size() * k);
    for (std::size_t s = 0; s < symbols.size(); ++s) {
        const std::size_t idx = nearest_index(symbols[s], alphabet);
        for (std::size_t b = 0; b < k; ++b) out[s * k + b] = static_cast<std::uint8_t>((idx >> (k - 1 - b)) & 1U);
    }
    return out;
}

AppResult app_detect(const SoftSymbolEnsemble& prior, const Alphabet& alphabet) {
    const std::size_t A = alphabet.size();
    if (A == 0) throw ArgumentError("app_detect: empty alphabet");
    if (!(prior.variance >= 0.0) || !std::isfinite(prior.variance)) {
        throw ArgumentError("app_detect: variance must be finite and >= 0");
    }
    AppResult out;
    out.alphabet_size = A;
    out.means.resize(prior.means.size());
    out.variances.resize(prior.means.size());
    out.probs.assign(prior.means.size() * A, 0.0);
    std::vector<double> logp(A);
    for (std::size_t l = 0; l < prior.means.size(); ++l) {
        double* p = out.probs.data() + l * A;
        if (prior.variance == 0.0) {
            const std::size_t idx = nearest_index(prior.means[l], alphabet);
            p[idx] = 1.0;
            out.means[l] = alphabet.points[idx];
            out.variances[l] = 0.0;
            continue;
        }
        double mx = -std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < A; ++a) {
            logp[a] = -std::norm(prior.means[l] - alphabet.points[a]) / prior.variance;
            mx = std::max(mx, logp[a]);
        }
        double total = 0.0;
        for (std::size_t a = 0; a < A; ++a) {
            p[a] = std::exp(logp[a] - mx);
            total += p[a];
        }
        Complex mean{0.0, 0.0};
        double second = 0.0;
        for (std::size_t a = 0; a < A; ++a) {
            p[a] /= total;
            mean += p[a] * alphabet.points[a];
            second += p[a] * std::norm(alphabet.points[a]);
        }
        out.means[l] = mean;
        out.variances[l] = std::max(second - std::norm(mean), 0.0);
    }
    return out;
}

}  // namespace mcwave
