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

#include "mcwave/mapping.hpp"
#include "mcwave/numerics.hpp"

namespace mcwave {

/// Frequency-domain channel H = F G F^H as seen by the detector: diagonal, row powers
/// sum_j |h_lj|^2, and the product H z.
class FrequencyChannel {
public:
    virtual ~FrequencyChannel() = default;
    virtual std::size_t size() const noexcept = 0;
    virtual const ComplexVector& diagonal() const noexcept = 0;
    virtual const std::vector<double>& row_power() const noexcept = 0;
    virtual ComplexVector apply(std::span<const Complex> z) const = 0;
};

/// Materialized H.
class DenseFrequencyChannel final : public FrequencyChannel {
public:
    explicit DenseFrequencyChannel(ComplexMatrix H);

    std::size_t size() const noexcept override { return H_.rows(); }
    const ComplexVector& diagonal() const noexcept override { return diag_; }
    const std::vector<double>& row_power() const noexcept override { return power_; }
    ComplexVector apply(std::span<const Complex> z) const override;

    const ComplexMatrix& matrix() const noexcept { return H_; }

private:
    ComplexMatrix H_;
    ComplexVector diag_;
    std::vector<double> power_;
};

/// H kept implicit through the sparse time-domain G. The diagonal of F P F^H for any P is the DFT
/// of P's cyclically wrapped diagonal sums, so neither H nor G G^H is ever formed.
class TimeDomainFrequencyChannel final : public FrequencyChannel {
public:
    explicit TimeDomainFrequencyChannel(SparseMatrix G);

    std::size_t size() const noexcept override { return G_.rows(); }
    const ComplexVector& diagonal() const noexcept override { return diag_; }
    const std::vector<double>& row_power() const noexcept override { return power_; }
    ComplexVector apply(std::span<const Complex> z) const override;

private:
    SparseMatrix G_;
    ComplexVector diag_;
    std::vector<double> power_;
};

struct CdidConfig {
    std::size_t max_iterations = 8;
    /// Floor and cap are relative to `energy`.
    double variance_floor = 1e-8;
    double variance_cap = 1e8;
    double damping = 1.0;
    /// Stop once the time-to-DD variance moves by less than this fraction.
    double tolerance = 1e-4;
    double energy = 1.0;

    void validate() const;
    double floor() const noexcept { return variance_floor * energy; }
    double cap() const noexcept { return variance_cap * energy; }
};

struct CdidState {
    ComplexVector s_bar;
    double v_s_bar = 1.0;
    std::size_t iteration = 0;

    /// Zero means with variance Es.
    static CdidState initial(std::size_t length, double energy);
};

struct GaussianMessage {
    ComplexVector means;
    double variance = 0.0;
};

enum class MessageDirection { TimeToDD, DDToTime };

struct ExtrinsicMessage {
    ComplexVector means;
    double variance = 0.0;
    MessageDirection direction = MessageDirection::TimeToDD;
};

struct FdeSicOutput {
    ComplexVector z_bar;
    double v_z_bar = 0.0;
    ComplexVector weights;
    ComplexVector q_bar;
    ComplexVector z_hat;
    std::vector<double> v_e;
};

/// MMSE with parallel interference cancellation in the frequency domain.
FdeSicOutput fde_sic_step(const CdidState& state, std::span<const Complex> q, const FrequencyChannel& H, double N0);

/// Precision subtraction posterior - prior, variance clamped to [floor, cap]. A non-positive
/// precision difference yields the cap and passes the posterior means through.
ExtrinsicMessage extrinsic_combine(const GaussianMessage& posterior, const GaussianMessage& prior,
                                   MessageDirection direction, const CdidConfig& cfg);

/// Doppler-axis transform of the means: forward for time-to-DD, inverse for DD-to-time.
SoftSymbolEnsemble cross_domain_pass(const ExtrinsicMessage& msg, std::size_t M, std::size_t N);

/// Arithmetic mean of the per-bin error variances.
double time_variance_aggregate(std::span<const double> v_e);

struct CdidIterationStats {
    double v_s_hat = 0.0;
    double v_time_to_dd = 0.0;
    double v_dd_to_time = 0.0;
    double v_s_bar_next = 0.0;
    double v_e_min = 0.0;
    double v_e_max = 0.0;
    double v_z_bar = 0.0;
    /// Mean |x_hat - reference|^2; NaN without a reference.
    double mse = 0.0;
};

struct CdidIterationTrace {
    FdeSicOutput fde;
    ComplexVector s_hat;
    double v_s_hat = 0.0;
    ExtrinsicMessage time_to_dd;
    SoftSymbolEnsemble dd_prior;
    AppResult app;
    GaussianMessage dd_posterior_time;
    ExtrinsicMessage dd_to_time;
    CdidState next;
};

struct CdidResult {
    ComplexVector x_hat;
    std::vector<double> x_variance;
    std::vector<double> probs;
    std::size_t alphabet_size = 0;
    /// Input of the last APP stage.
    SoftSymbolEnsemble dd_extrinsic;
    std::vector<CdidIterationStats> iterations;
};

CdidResult run_cdid(std::span<const Complex> q, const FrequencyChannel& H, std::size_t M, std::size_t N,
                    const Alphabet& alphabet, double N0, const CdidConfig& cfg,
                    std::span<const Complex> reference = {}, std::vector<CdidIterationTrace>* trace = nullptr);

CdidResult run_cdid(std::span<const Complex> q, const ComplexMatrix& H, std::size_t M, std::size_t N,
                    const Alphabet& alphabet, double N0, const CdidConfig& cfg,
                    std::span<const Complex> reference = {}, std::vector<CdidIterationTrace>* trace = nullptr);

}  // namespace mcwave
