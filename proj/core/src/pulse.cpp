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

#include "mcwave/pulse.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "mcwave/errors.hpp"

namespace mcwave {

namespace {

constexpr double kPi = std::numbers::pi;

// 8-point Gauss-Legendre rule on [-1, 1].
constexpr std::array<double, 8> kGaussNodes{-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                            -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                            0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kGaussWeights{0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                              0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                              0.2223810344533745, 0.1012285362903763};

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) throw ArgumentError(std::string("ambiguity: ") + name + " is not finite");
}

}  // namespace

void PulseShape::validate() const {
    if (!(rolloff >= 0.0 && rolloff <= 1.0)) throw ArgumentError("pulse.rolloff must lie in [0, 1]");
    if (truncation < 1) throw ArgumentError("pulse.truncation must be positive");
    if (oversampling < 1) throw ArgumentError("pulse.oversampling must be positive");
}

double PulseShape::value(double t) const {
    const double b = rolloff;
    if (std::abs(t) < 1e-12) return 1.0 - b + 4.0 * b / kPi;
    if (b > 0.0 && std::abs(std::abs(t) - 1.0 / (4.0 * b)) < 1e-12) {
        return b / std::numbers::sqrt2 *
               ((1.0 + 2.0 / kPi) * std::sin(kPi / (4.0 * b)) + (1.0 - 2.0 / kPi) * std::cos(kPi / (4.0 * b)));
    }
    const double x = 4.0 * b * t;
    return (std::sin(kPi * t * (1.0 - b)) + 4.0 * b * t * std::cos(kPi * t * (1.0 + b))) /
           (kPi * t * (1.0 - x * x));
}

double PulseShape::spectrum(double f) const {
    const double a = std::abs(f);
    const double flat = (1.0 - rolloff) / 2.0;
    const double edge = (1.0 + rolloff) / 2.0;
    if (a <= flat) return 1.0;
    if (a > edge) return 0.0;
    return std::cos(kPi / (2.0 * rolloff) * (a - flat));
}

Complex ambiguity(const PulseShape& pulse, double tau, double nu) {
    require_finite(tau, "tau");
    require_finite(nu, "nu");
    if (std::abs(tau) > pulse.support()) return {0.0, 0.0};

    // A_p(tau, nu) = integral P(f) P(f - nu) exp(j 2 pi f tau) df.
    const double edge = (1.0 + pulse.rolloff) / 2.0;
    const double flat = (1.0 - pulse.rolloff) / 2.0;
    const double lo = std::max(-edge, -edge + nu);
    const double hi = std::min(edge, edge + nu);
    if (hi <= lo) return {0.0, 0.0};

    std::array<double, 6> cuts{lo, hi, -flat, flat, -flat + nu, flat + nu};
    std::sort(cuts.begin(), cuts.end());

    const double density = pulse.oversampling * (1.0 + std::abs(tau)) / 4.0;
    Complex total{0.0, 0.0};
    double prev = lo;
    for (double cut : cuts) {
        if (cut <= prev || cut > hi) continue;
        const double len = cut - prev;
        const int panels = std::max(1, static_cast<int>(std::ceil(len * density)));
        const double width = len / panels;
        for (int p = 0; p < panels; ++p) {
            const double a = prev + p * width;
            const double half = width / 2.0;
            const double mid = a + half;
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < kGaussNodes.size(); ++k) {
                const double f = mid + half * kGaussNodes[k];
                const double amp = pulse.spectrum(f) * pulse.spectrum(f - nu);
                const double ph = 2.0 * kPi * f * tau;
                acc += kGaussWeights[k] * amp * Complex(std::cos(ph), std::sin(ph));
            }
            total += half * acc;
        }
        prev = cut;
    }
    return total;
}

AmbiguityGrid::AmbiguityGrid(const PulseShape& pulse, GridRange tau, GridRange nu, std::size_t tau_steps,
                             std::size_t nu_steps)
    : pulse_(pulse), tau_(tau), nu_(nu), tau_steps_(tau_steps), nu_steps_(nu_steps) {
    pulse.validate();
    const auto check = [](GridRange r, std::size_t steps, const char* axis) {
        if (!std::isfinite(r.lo) || !std::isfinite(r.hi)) {
            throw ArgumentError(std::string("ambiguity grid: non-finite ") + axis + " range");
        }
        if (r.hi < r.lo) throw ArgumentError(std::string("ambiguity grid: empty ") + axis + " range");
        if (r.hi == r.lo ? steps != 1 : steps < 2) {
            throw ArgumentError(std::string("ambiguity grid: ") + axis +
                                " needs >= 2 steps (exactly 1 for a point range)");
        }
    };
    check(tau, tau_steps, "tau");
    check(nu, nu_steps, "nu");
    values_.resize(tau_steps_ * nu_steps_);
    for (std::size_t i = 0; i < tau_steps_; ++i)
        for (std::size_t j = 0; j < nu_steps_; ++j) values_[i * nu_steps_ + j] = ambiguity(pulse_, tau_at(i), nu_at(j));
}

double AmbiguityGrid::tau_at(std::size_t i) const {
    if (tau_steps_ == 1) return tau_.lo;
    return tau_.lo + (tau_.hi - tau_.lo) * static_cast<double>(i) / static_cast<double>(tau_steps_ - 1);
}

double AmbiguityGrid::nu_at(std::size_t j) const {
    if (nu_steps_ == 1) return nu_.lo;
    return nu_.lo + (nu_.hi - nu_.lo) * static_cast<double>(j) / static_cast<double>(nu_steps_ - 1);
}

Complex AmbiguityGrid::lookup(double tau, double nu) const {
    if (!(tau >= tau_.lo && tau <= tau_.hi && nu >= nu_.lo && nu <= nu_.hi)) {
        throw ArgumentError("ambiguity grid: query outside the cached range");
    }
    const auto locate = [](double v, GridRange r, std::size_t steps) -> std::pair<std::size_t, double> {
        if (steps == 1) return {0, 0.0};
        const double pos = (v - r.lo) / (r.hi - r.lo) * static_cast<double>(steps - 1);
        auto idx = static_cast<std::size_t>(std::floor(pos));
        if (idx >= steps - 1) idx = steps - 2;
        return {idx, pos - static_cast<double>(idx)};
    };
    const auto [i, u] = locate(tau, tau_, tau_steps_);
    const auto [j, w] = locate(nu, nu_, nu_steps_);
    const std::size_t i1 = tau_steps_ == 1 ? i : i + 1;
    const std::size_t j1 = nu_steps_ == 1 ? j : j + 1;
    return (1.0 - u) * ((1.0 - w) * node(i, j) + w * node(i, j1)) + u * ((1.0 - w) * node(i1, j) + w * node(i1, j1));
}

AmbiguityGrid build_ambiguity_grid(const PulseShape& pulse, GridRange tau, GridRange nu, std::size_t tau_steps,
                                   std::size_t nu_steps) {
    return AmbiguityGrid(pulse, tau, nu, tau_steps, nu_steps);
}

}  // namespace mcwave
