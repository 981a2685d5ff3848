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

#include "mcwave/cdid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "mcwave/errors.hpp"

namespace mcwave {

namespace {

ComplexVector wrapped_diagonal_dft(const ComplexVector& wrapped) {
    const std::size_t L = wrapped.size();
    auto out = dft(wrapped, L);
    const double scale = 1.0 / std::sqrt(static_cast<double>(L));
    for (auto& v : out) v *= scale;
    return out;
}

}  // namespace

DenseFrequencyChannel::DenseFrequencyChannel(ComplexMatrix H) : H_(std::move(H)) {
    if (H_.rows() != H_.cols() || H_.rows() == 0) throw DimensionError("DenseFrequencyChannel: H must be square");
    diag_.resize(H_.rows());
    power_.resize(H_.rows());
    for (std::size_t l = 0; l < H_.rows(); ++l) {
        diag_[l] = H_(l, l);
        double p = 0.0;
        for (const auto& v : H_.row(l)) p += std::norm(v);
        power_[l] = p;
    }
}

ComplexVector DenseFrequencyChannel::apply(std::span<const Complex> z) const { return H_.apply(z); }

TimeDomainFrequencyChannel::TimeDomainFrequencyChannel(SparseMatrix G) : G_(std::move(G)) {
    const std::size_t L = G_.rows();
    if (L == 0 || G_.cols() != L) throw DimensionError("TimeDomainFrequencyChannel: G must be square");
    const auto wrap = [L](std::size_t a, std::size_t b) { return (a + L - b) % L; };

    ComplexVector diag_sums(L);
    std::vector<std::vector<SparseMatrix::Entry>> columns(L);
    for (std::size_t r = 0; r < L; ++r) {
        for (const auto& e : G_.row(r)) {
            diag_sums[wrap(r, e.col)] += e.value;
            columns[e.col].push_back({r, e.value});
        }
    }
    diag_ = wrapped_diagonal_dft(diag_sums);

    ComplexVector gram_sums(L);
    for (const auto& col : columns)
        for (const auto& a : col)
            for (const auto& b : col) gram_sums[wrap(a.col, b.col)] += a.value * std::conj(b.value);
    const auto power = wrapped_diagonal_dft(gram_sums);
    power_.resize(L);
    for (std::size_t l = 0; l < L; ++l) power_[l] = std::max(power[l].real(), 0.0);
}

ComplexVector TimeDomainFrequencyChannel::apply(std::span<const Complex> z) const {
    const std::size_t L = size();
    const auto t = idft(z, L);
    return dft(G_.apply(t), L);
}

void CdidConfig::validate() const {
    if (max_iterations == 0) throw ArgumentError("cdid.iterations must be positive");
    if (!(variance_floor > 0.0) || !(variance_cap > variance_floor)) {
        throw ArgumentError("cdid: need 0 < variance_floor < variance_cap");
    }
    if (!(damping > 0.0 && damping <= 1.0)) throw ArgumentError("cdid.damping must lie in (0, 1]");
    if (!(tolerance >= 0.0)) throw ArgumentError("cdid: tolerance must be >= 0");
    if (!(energy > 0.0)) throw ArgumentError("cdid: symbol energy must be positive");
}

CdidState CdidState::initial(std::size_t length, double energy) {
    return {ComplexVector(length, Complex{0.0, 0.0}), energy, 0};
}

FdeSicOutput fde_sic_step(const CdidState& state, std::span<const Complex> q, const FrequencyChannel& H, double N0) {
    const std::size_t L = H.size();
    if (q.size() != L || state.s_bar.size() != L) throw DimensionError("fde_sic_step: length mismatch");
    if (!(N0 >= 0.0)) throw ArgumentError("fde_sic_step: N0 must be >= 0");
    FdeSicOutput out;
    out.z_bar = dft(state.s_bar, L);
    out.v_z_bar = state.v_s_bar;
    out.q_bar = H.apply(out.z_bar);
    out.weights.resize(L);
    out.z_hat.resize(L);
    out.v_e.resize(L);
    const auto& h = H.diagonal();
    const auto& R = H.row_power();
    const double v = out.v_z_bar;
    for (std::size_t l = 0; l < L; ++l) {
        const double den = v * R[l] + N0;
        if (den > 0.0) {
            out.weights[l] = v * std::conj(h[l]) / den;
            out.v_e[l] = std::max(v - v * v * std::norm(h[l]) / den, 0.0);
        } else {
            out.weights[l] = 0.0;
            out.v_e[l] = v;
        }
        out.z_hat[l] = out.z_bar[l] + out.weights[l] * (q[l] - out.q_bar[l]);
    }
    return out;
}

ExtrinsicMessage extrinsic_combine(const GaussianMessage& posterior, const GaussianMessage& prior,
                                   MessageDirection direction, const CdidConfig& cfg) {
    if (posterior.means.size() != prior.means.size()) throw DimensionError("extrinsic_combine: length mismatch");
    if (!(posterior.variance > 0.0) || !(prior.variance > 0.0)) {
        throw ArgumentError("extrinsic_combine: variances must be positive");
    }
    ExtrinsicMessage out;
    out.direction = direction;
    const double precision = 1.0 / posterior.variance - 1.0 / prior.variance;
    if (!(precision > 0.0)) {
        out.variance = cfg.cap();
        out.means = posterior.means;
        return out;
    }
    out.variance = std::clamp(1.0 / precision, cfg.floor(), cfg.cap());
    out.means.resize(posterior.means.size());
    for (std::size_t i = 0; i < out.means.size(); ++i) {
        out.means[i] = out.variance * (posterior.means[i] / posterior.variance - prior.means[i] / prior.variance);
    }
    return out;
}

SoftSymbolEnsemble cross_domain_pass(const ExtrinsicMessage& msg, std::size_t M, std::size_t N) {
    const auto dir = msg.direction == MessageDirection::TimeToDD ? TransformDirection::Forward
                                                                  : TransformDirection::Inverse;
    return {doppler_transform(msg.means, M, N, dir), msg.variance};
}

double time_variance_aggregate(std::span<const double> v_e) {
    if (v_e.empty()) throw ArgumentError("time_variance_aggregate: empty input");
    return std::accumulate(v_e.begin(), v_e.end(), 0.0) / static_cast<double>(v_e.size());
}

CdidResult run_cdid(std::span<const Complex> q, const FrequencyChannel& H, std::size_t M, std::size_t N,
                    const Alphabet& alphabet, double N0, const CdidConfig& cfg, std::span<const Complex> reference,
                    std::vector<CdidIterationTrace>* trace) {
    cfg.validate();
    const std::size_t L = M * N;
    if (L == 0 || q.size() != L || H.size() != L) {
        throw DimensionError("run_cdid: expected vectors of length M*N = " + std::to_string(L));
    }
    if (!reference.empty() && reference.size() != L) throw DimensionError("run_cdid: reference length mismatch");
    if (!(N0 >= 0.0) || !std::isfinite(N0)) throw ArgumentError("run_cdid: N0 must be finite and >= 0");
    for (const auto& v : q)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw ArgumentError("run_cdid: non-finite observation");
    for (const auto& v : H.diagonal())
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw ArgumentError("run_cdid: non-finite channel");

    CdidResult result;
    result.alphabet_size = alphabet.size();
    CdidState state = CdidState::initial(L, cfg.energy);
    double previous_v_td = std::numeric_limits<double>::quiet_NaN();

    for (std::size_t it = 0; it < cfg.max_iterations; ++it) {
        auto fde = fde_sic_step(state, q, H, N0);
        const GaussianMessage posterior_s{idft(fde.z_hat, L),
                                          std::max(time_variance_aggregate(fde.v_e), cfg.floor())};
        const double v_s_hat = posterior_s.variance;

        auto to_dd = extrinsic_combine(posterior_s, {state.s_bar, state.v_s_bar}, MessageDirection::TimeToDD, cfg);
        auto dd_prior = cross_domain_pass(to_dd, M, N);
        auto app = app_detect(dd_prior, alphabet);

        const double v_dt = std::max(time_variance_aggregate(app.variances), cfg.floor());
        GaussianMessage posterior_time{doppler_transform(app.means, M, N, TransformDirection::Inverse), v_dt};
        auto to_time = extrinsic_combine(posterior_time, {to_dd.means, to_dd.variance}, MessageDirection::DDToTime, cfg);

        CdidState next{to_time.means, to_time.variance, it + 1};
        if (it > 0 && cfg.damping < 1.0) {
            for (std::size_t i = 0; i < L; ++i) {
                next.s_bar[i] = cfg.damping * next.s_bar[i] + (1.0 - cfg.damping) * state.s_bar[i];
            }
            next.v_s_bar = cfg.damping * next.v_s_bar + (1.0 - cfg.damping) * state.v_s_bar;
        }

        CdidIterationStats stats;
        stats.v_s_hat = v_s_hat;
        stats.v_time_to_dd = to_dd.variance;
        stats.v_dd_to_time = to_time.variance;
        stats.v_s_bar_next = next.v_s_bar;
        stats.v_z_bar = fde.v_z_bar;
        const auto [lo, hi] = std::minmax_element(fde.v_e.begin(), fde.v_e.end());
        stats.v_e_min = *lo;
        stats.v_e_max = *hi;
        if (reference.empty()) {
            stats.mse = std::numeric_limits<double>::quiet_NaN();
        } else {
            double acc = 0.0;
            for (std::size_t i = 0; i < L; ++i) acc += std::norm(app.means[i] - reference[i]);
            stats.mse = acc / static_cast<double>(L);
        }
        result.iterations.push_back(stats);

        result.x_hat = app.means;
        result.x_variance = app.variances;
        result.probs = app.probs;
        result.dd_extrinsic = dd_prior;

        if (trace) {
            trace->push_back({std::move(fde), posterior_s.means, v_s_hat, to_dd, std::move(dd_prior), std::move(app),
                              std::move(posterior_time), std::move(to_time), next});
        }

        const double v_td = to_dd.variance;
        const bool settled = it > 0 && std::abs(v_td - previous_v_td) < cfg.tolerance * std::abs(previous_v_td);
        previous_v_td = v_td;
        state = std::move(next);
        if (settled) break;
    }
    return result;
}

CdidResult run_cdid(std::span<const Complex> q, const ComplexMatrix& H, std::size_t M, std::size_t N,
                    const Alphabet& alphabet, double N0, const CdidConfig& cfg, std::span<const Complex> reference,
                    std::vector<CdidIterationTrace>* trace) {
    const DenseFrequencyChannel channel(H);
    return run_cdid(q, channel, M, N, alphabet, N0, cfg, reference, trace);
}

}  // namespace mcwave
