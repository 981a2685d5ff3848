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
#include <vector>

#include "mcwave/numerics.hpp"

namespace mcwave {

enum class PulseKind { RootRaisedCosine };

/// Transmit pulse p(t). Time is normalized to the symbol period (T_s = 1) and frequency to 1/T_s.
///
/// The root-raised-cosine spectrum is compactly supported on |f| <= (1 + rolloff)/2, so the
/// ambiguity function is integrated over frequency where the integrand has finite support and
/// piecewise-analytic pieces. `truncation` bounds the correlation kernel: A_p is taken as exactly
/// zero for |tau| > 2 * truncation, which is what makes the channel matrices banded.
struct PulseShape {
    PulseKind kind = PulseKind::RootRaisedCosine;
    double rolloff = 0.3;
    int truncation = 8;
    /// Quadrature density: oversampling * (1 + |tau|) / 4 Gauss panels per unit of frequency.
    int oversampling = 16;

    void validate() const;

    /// Kernel support: A_p(tau, .) == 0 for |tau| > support().
    double support() const noexcept { return 2.0 * truncation; }

    /// Unit-energy pulse sample p(t).
    double value(double t) const;
    /// Spectrum P(f); real and even, with integral of P^2 equal to one.
    double spectrum(double f) const;
};

/// A_p(tau, nu) = integral p(t) p*(t - tau) exp(-j 2 pi nu (t - tau)) dt, tau in T_s, nu in 1/T_s.
Complex ambiguity(const PulseShape& pulse, double tau, double nu);

struct GridRange {
    double lo = 0.0;
    double hi = 0.0;
};

/// Cached samples of A_p on a regular (tau, nu) grid with bilinear lookup between nodes.
class AmbiguityGrid {
public:
    AmbiguityGrid(const PulseShape& pulse, GridRange tau, GridRange nu, std::size_t tau_steps,
                  std::size_t nu_steps);

    std::size_t tau_steps() const noexcept { return tau_steps_; }
    std::size_t nu_steps() const noexcept { return nu_steps_; }
    double tau_at(std::size_t i) const;
    double nu_at(std::size_t j) const;
    Complex node(std::size_t i, std::size_t j) const { return values_[i * nu_steps_ + j]; }

    /// Bilinear interpolation; throws ArgumentError outside the grid.
    Complex lookup(double tau, double nu) const;

    const PulseShape& pulse() const noexcept { return pulse_; }

private:
    PulseShape pulse_;
    GridRange tau_;
    GridRange nu_;
    std::size_t tau_steps_;
    std::size_t nu_steps_;
    std::vector<Complex> values_;
};

AmbiguityGrid build_ambiguity_grid(const PulseShape& pulse, GridRange tau, GridRange nu,
                                   std::size_t tau_steps, std::size_t nu_steps);

}  // namespace mcwave
