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

#include "mcwave/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "mcwave/errors.hpp"

namespace mcwave {

AuxChannelModel fit_aux_channel(std::span<const Complex> x, std::span<const Complex> x_hat) {
    if (x.size() != x_hat.size()) throw DimensionError("fit_aux_channel: length mismatch");
    if (x.size() < 2) throw DimensionError("fit_aux_channel: need at least two symbols");
    Complex cross{0.0, 0.0};
    double energy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        cross += std::conj(x[i]) * x_hat[i];
        energy += std::norm(x[i]);
    }
    if (!(energy > 0.0)) throw DegenerateError("fit_aux_channel: reference has zero energy");
    AuxChannelModel m;
    m.alpha = cross / energy;
    double resid = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) resid += std::norm(x_hat[i] - m.alpha * x[i]);
    m.sigma2 = std::max(resid / static_cast<double>(x.size()), kAuxVarianceFloor);
    return m;
}

double pragmatic_capacity(std::span<const Complex> x, std::span<const Complex> x_hat, const Alphabet& alphabet) {
    if (x.size() != x_hat.size()) throw DimensionError("pragmatic_capacity: length mismatch");
    AuxChannelModel aux;
    try {
        aux = fit_aux_channel(x, x_hat);
    } catch (const DegenerateError&) {
        return 0.0;
    }
    const std::size_t A = alphabet.size();
    const double log_a = std::log(static_cast<double>(A));
    std::vector<double> metric(A);
    double acc = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double own = -std::norm(x_hat[k] - aux.alpha * x[k]) / aux.sigma2;
        double mx = -std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < A; ++a) {
            metric[a] = -std::norm(x_hat[k] - aux.alpha * alphabet.points[a]) / aux.sigma2;
            mx = std::max(mx, metric[a]);
        }
        double sum = 0.0;
        for (double v : metric) sum += std::exp(v - mx);
        acc += own - (mx + std::log(sum)) + log_a;
    }
    const double bits = acc / static_cast<double>(x.size()) / std::numbers::ln2;
    if (!std::isfinite(bits)) return 0.0;
    return std::clamp(bits, 0.0, static_cast<double>(alphabet.bits_per_symbol));
}

double symbol_error_rate(std::span<const Complex> x, std::span<const Complex> x_hat, const Alphabet& alphabet) {
    if (x.size() != x_hat.size()) throw DimensionError("symbol_error_rate: length mismatch");
    if (x.empty()) return 0.0;
    std::size_t errors = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (nearest_index(x[i], alphabet) != nearest_index(x_hat[i], alphabet)) ++errors;
    }
    return static_cast<double>(errors) / static_cast<double>(x.size());
}

}  // namespace mcwave
