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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "oracle.hpp"

using namespace mcwave;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        if (!detail.empty()) detail += "; ";
        detail += (ok ? "" : "FAILED ") + what;
    }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

struct PairedStats {
    double mean = 0.0;
    double se = 0.0;
};

PairedStats paired(const std::vector<double>& a, const std::vector<double>& b) {
    const double n = static_cast<double>(a.size());
    double mean = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) mean += a[i] - b[i];
    mean /= n;
    double var = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) var += std::pow(a[i] - b[i] - mean, 2);
    var /= n - 1.0;
    return {mean, std::sqrt(var / n)};
}

std::vector<double> column(const std::vector<ResultRecord>& records, Waveform w, double snr) {
    std::vector<double> out;
    for (const auto& r : records)
        if (r.waveform == w && r.snr_db == snr) out.push_back(r.capacity_bits);
    return out;
}

Outcome waveform_ordering() {
    RunConfig cfg;
    cfg.snr_grid_db = {4, 8, 12};
    cfg.frames_per_point = 500;
    cfg.threads = 0;
    const auto records = run_sweep(cfg);
    const auto summary = summarize(records, cfg);
    Outcome o;
    for (double snr : cfg.snr_grid_db) {
        const auto sc = column(records, Waveform::SC, snr);
        const auto ofdm = column(records, Waveform::OFDM, snr);
        const auto otfs = column(records, Waveform::OTFS, snr);
        const auto gap_hi = paired(otfs, sc);
        const auto gap_lo = paired(sc, ofdm);
        o.require(gap_hi.mean > 2.0 * gap_hi.se,
                  fmt("%g dB OTFS-SC %+.4f (2se %.4f)", snr, gap_hi.mean, 2.0 * gap_hi.se));
        o.require(gap_lo.mean >= -gap_lo.se, fmt("%g dB SC-OFDM %+.4f (se %.4f)", snr, gap_lo.mean, gap_lo.se));
    }
    for (const auto& s : summary)
        std::printf("  %-4s %4.0f dB capacity %.4f throughput %.4f\n", std::string(to_string(s.waveform)).c_str(),
                    s.snr_db, s.mean_capacity, s.mean_throughput);
    return o;
}

Outcome blockage_mass() {
    Outcome o;
    const double qs[2] = {0.2, 0.8};
    std::vector<ResultRecord> recs[2];
    for (int k = 0; k < 2; ++k) {
        RunConfig cfg;
        cfg.channel.q = qs[k];
        cfg.snr_grid_db = {10};
        cfg.frames_per_point = 5000;
        cfg.threads = 0;
        recs[k] = run_sweep(cfg);
        for (const auto& s : summarize(recs[k], cfg)) {
            const auto name = std::string(to_string(s.waveform));
            if (k == 1)
                o.require(std::abs(s.outage - 0.4096) <= 0.02, fmt("q=0.8 outage %.4f", s.outage).insert(0, name + " "));
            else
                o.require(s.outage <= 0.01, fmt("q=0.2 outage %.4f", s.outage).insert(0, name + " "));
        }
    }
    for (auto w : {Waveform::SC, Waveform::OFDM, Waveform::OTFS}) {
        // F_0.2(c) <= F_0.8(c) everywhere, checked at every sample of either CDF.
        auto lo = column(recs[0], w, 10);
        auto hi = column(recs[1], w, 10);
        std::sort(lo.begin(), lo.end());
        std::sort(hi.begin(), hi.end());
        std::vector<double> grid(lo);
        grid.insert(grid.end(), hi.begin(), hi.end());
        double worst = 0.0;
        for (double c : grid) {
            const double f_lo = static_cast<double>(std::upper_bound(lo.begin(), lo.end(), c) - lo.begin()) / lo.size();
            const double f_hi = static_cast<double>(std::upper_bound(hi.begin(), hi.end(), c) - hi.begin()) / hi.size();
            worst = std::max(worst, f_lo - f_hi);
        }
        o.require(worst <= 0.0, fmt("dominance violation %.4f", worst).insert(0, std::string(to_string(w)) + " "));
    }
    return o;
}

Outcome degenerate_exactness() {
    RunConfig cfg;
    cfg.channel.q = 0.0;
    cfg.channel.tau_max = 0.0;
    cfg.channel.nu_max = 0.0;
    cfg.snr_grid_db = {std::numeric_limits<double>::infinity()};
    cfg.frames_per_point = 100;
    const auto records = run_sweep(cfg);
    double worst_ser = 0.0;
    double min_cap = 2.0;
    for (const auto& r : records) {
        worst_ser = std::max(worst_ser, r.ser);
        min_cap = std::min(min_cap, r.capacity_bits);
    }
    Outcome o;
    o.require(records.size() == 300, fmt("%g records", static_cast<double>(records.size())));
    o.require(worst_ser == 0.0, fmt("max SER %.3g", worst_ser));
    o.require(min_cap >= 1.99, fmt("min capacity %.6f", min_cap));
    return o;
}

Outcome circulant_exactness() {
    Outcome o;
    double worst = 0.0;
    for (auto w : {Waveform::SC, Waveform::OFDM}) {
        const FrameGeometry g{w, 32, 16, 3};
        for (int d = 0; d <= 3; ++d) {
            const ChannelRealization r{{{false, static_cast<double>(d), 0.0}}, 0};
            const auto G = build_channel_matrix(r, g.tx_len(), PulseShape{}, g.M);
            const auto x = oracle::random_qpsk(g.info_symbols(), 40 + static_cast<std::uint64_t>(d));
            const auto rx = receive_front_end(G.apply(transmit(x, g).tx_samples), g, G);
            const auto est = w == Waveform::SC ? equalize_sc(rx, 0.0) : equalize_ofdm(rx, 0.0);
            worst = std::max(worst, oracle::max_diff(est, x));
        }
    }
    o.require(worst <= 1e-6, fmt("max symbol error %.3g", worst));
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    double worst = 0.0;
    std::string where = "none";
    double worst_rel = 0.0;
    auto track = [&](double d, const std::string& what, double scale = 1.0) {
        worst_rel = std::max(worst_rel, d / std::max(scale, 1.0));
        if (d > worst) {
            worst = d;
            where = what;
        }
    };
    auto peak = [](const auto& v) {
        double m = 0.0;
        for (const auto& e : v) m = std::max(m, std::abs(e));
        return m;
    };
    const auto A = Alphabet::qpsk();
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        RunConfig cfg;
        cfg.M = 4;
        cfg.N = 4;
        cfg.l_cp = 1;
        cfg.channel.m_ap = 2;
        cfg.seed = seed;
        const FrameSimulator sim(cfg);
        const auto draw = sim.draw(0);
        const double N0 = noise_density(10.0);
        for (auto w : {Waveform::SC, Waveform::OFDM, Waveform::OTFS}) {
            const auto g = cfg.geometry(w);
            const auto tag = std::string(to_string(w)) + " seed " + std::to_string(seed) + " ";
            const auto G = build_channel_matrix(draw.realization, g.tx_len(), cfg.pulse, g.M);
            const auto G_ref = oracle::brute_force_channel(draw.realization, g.tx_len(), cfg.pulse, g.M);
            track(oracle::max_diff(G.matrix, G_ref), tag + "G");

            const auto x = map_indices(std::span(draw.symbol_indices).first(g.info_symbols()), A);
            auto noise_rng = make_stream(seed, 0, StreamId::Noise, 0);
            const auto noise = add_awgn(ComplexVector(g.tx_len()), N0, noise_rng);
            const auto dense = oracle::dense_pipeline(g, G_ref, x, noise, N0);

            const auto tx = transmit(x, g);
            track(oracle::max_diff(tx.tx_samples, dense.tx), tag + "tx");
            auto y = G.apply(tx.tx_samples);
            for (std::size_t i = 0; i < y.size(); ++i) y[i] += noise[i];
            track(oracle::max_diff(y, dense.y), tag + "y");
            const auto rx = receive_front_end(y, g, G);
            track(oracle::max_diff(rx.stripped, dense.stripped), tag + "stripped");
            for (std::size_t b = 0; b < dense.domain.size(); ++b)
                track(oracle::max_diff(rx.domain_vectors[b], dense.domain[b]), tag + "domain");

            if (w != Waveform::OTFS) {
                for (std::size_t b = 0; b < dense.block_freq.size(); ++b)
                    track(oracle::max_diff(rx.channels->block_freq[b], dense.block_freq[b]), tag + "H block");
                const auto est = w == Waveform::SC ? equalize_sc(rx, N0) : equalize_ofdm(rx, N0);
                track(oracle::max_diff(est, dense.equalized), tag + "equalized");
                continue;
            }
            track(oracle::max_diff(rx.otfs_frequency, dense.otfs_q), tag + "q");
            const TimeDomainFrequencyChannel H(rx.channels->otfs_time);
            CdidConfig cc;
            cc.tolerance = 0.0;
            std::vector<CdidIterationTrace> trace;
            run_cdid(rx.otfs_frequency, H, g.M, g.N, A, N0, cc, x, &trace);
            const auto ref = oracle::dense_cdid(dense.otfs_q, dense.otfs_freq, g.M, g.N, N0, cc.max_iterations);
            for (std::size_t it = 0; it < ref.size(); ++it) {
                const auto& t = trace[it];
                const auto& d = ref[it];
                const auto at = tag + "iter " + std::to_string(it + 1) + " ";
                track(oracle::max_diff(t.fde.z_bar, d.z_bar), at + "z_bar", peak(d.z_bar));
                track(oracle::max_diff(t.fde.weights, d.weights), at + "weights", peak(d.weights));
                track(oracle::max_diff(t.fde.q_bar, d.q_bar), at + "q_bar", peak(d.q_bar));
                track(oracle::max_diff(t.fde.z_hat, d.z_hat), at + "z_hat", peak(d.z_hat));
                for (std::size_t l = 0; l < d.v_e.size(); ++l)
                    track(std::abs(t.fde.v_e[l] - d.v_e[l]), at + "v_e", peak(d.v_e));
                track(oracle::max_diff(t.s_hat, d.s_hat), at + "s_hat", peak(d.s_hat));
                track(oracle::max_diff(t.time_to_dd.means, d.s_td), at + "s_td", peak(d.s_td));
                track(oracle::max_diff(t.dd_prior.means, d.x_bar), at + "x_bar", peak(d.x_bar));
                track(oracle::max_diff(t.app.means, d.x_hat), at + "x_hat", peak(d.x_hat));
                track(oracle::max_diff(t.dd_posterior_time.means, d.s_dt), at + "s_dt", peak(d.s_dt));
                track(oracle::max_diff(t.dd_to_time.means, d.s_bar_next), at + "s_bar_next", peak(d.s_bar_next));
            }
        }
    }
    o.require(worst <= 1e-9, fmt("max abs error %.3g", worst) + " at " + where);
    std::printf("  max error relative to max(1, peak magnitude): %.3g\n", worst_rel);
    return o;
}

Outcome cdid_gain() {
    RunConfig cfg;
    const auto A = Alphabet::qpsk();
    const auto g = cfg.geometry(Waveform::OTFS);
    const FrameSimulator sim(cfg);
    const double N0 = noise_density(10.0);
    double mse_first = 0.0, mse_last = 0.0, cap_first = 0.0, cap_last = 0.0;
    const std::size_t frames = 200;
    for (std::size_t f = 0; f < frames; ++f) {
        const auto draw = sim.draw(f);
        const auto G = build_channel_matrix(draw.realization, g.tx_len(), cfg.pulse, g.M);
        const auto x = map_indices(draw.symbol_indices, A);
        auto noise_rng = make_stream(cfg.seed, f, StreamId::Noise, 0);
        const auto y = add_awgn(G.apply(transmit(x, g).tx_samples), N0, noise_rng);
        const auto rx = receive_front_end(y, g, G);
        const TimeDomainFrequencyChannel H(rx.channels->otfs_time);
        std::vector<CdidIterationTrace> trace;
        const auto res = run_cdid(rx.otfs_frequency, H, g.M, g.N, A, N0, cfg.cdid, x, &trace);
        mse_first += res.iterations.front().mse;
        mse_last += res.iterations.back().mse;
        cap_first += pragmatic_capacity(x, trace.front().dd_prior.means, A);
        cap_last += pragmatic_capacity(x, trace.back().dd_prior.means, A);
    }
    const double n = static_cast<double>(frames);
    Outcome o;
    o.require(mse_last <= mse_first, fmt("MSE first %.5f final %.5f", mse_first / n, mse_last / n));
    o.require(cap_last >= cap_first - 0.01 * n, fmt("capacity first %.4f final %.4f", cap_first / n, cap_last / n));
    return o;
}

Outcome metric_calibration() {
    const auto A = Alphabet::qpsk();
    const auto x = oracle::random_qpsk(1000000, 77);
    const auto w = oracle::random_vector(x.size(), 78);
    Outcome o;
    for (double snr : {-2.0, 0.0, 4.0, 8.0}) {
        const double s = std::sqrt(noise_density(snr));
        ComplexVector y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + s * w[i];
        const double got = pragmatic_capacity(x, y, A);
        const double ref = oracle::qpsk_capacity_gauss_hermite(snr);
        o.require(std::abs(got - ref) <= 0.02, fmt("%g dB %.4f vs %.4f", snr, got, ref));
    }
    return o;
}

Outcome invariants() {
    Outcome o;
    double unitary = 0.0;
    for (std::size_t n : {1, 4, 16, 29, 32, 512}) {
        const auto v = oracle::random_vector(n, n);
        unitary = std::max(unitary, std::abs(norm(dft(v, n)) - norm(v)));
        unitary = std::max(unitary, max_abs_diff(idft(dft(v, n), n), v));
        const auto dd = doppler_transform(v, 1, n, TransformDirection::Forward);
        unitary = std::max(unitary, max_abs_diff(doppler_transform(dd, 1, n, TransformDirection::Inverse), v));
    }
    o.require(unitary <= 1e-10, fmt("transform error %.3g", unitary));

    const auto A = Alphabet::qpsk();
    double app = 0.0;
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto m = oracle::random_vector(64, 500 + s);
        SoftSymbolEnsemble prior{m, std::pow(10.0, -3.0 + 0.1 * static_cast<double>(s))};
        const auto r = app_detect(prior, A);
        for (std::size_t i = 0; i < 64; ++i) {
            double sum = 0.0;
            for (std::size_t k = 0; k < A.size(); ++k) sum += r.probs[i * A.size() + k];
            app = std::max(app, std::abs(sum - 1.0));
        }
    }
    o.require(app <= 1e-12, fmt("APP normalization %.3g", app));

    bool cp_ok = true;
    for (auto w : {Waveform::SC, Waveform::OFDM, Waveform::OTFS}) {
        const FrameGeometry g{w, 32, 16, 3};
        const auto v = oracle::random_vector(g.info_symbols(), 9);
        cp_ok = cp_ok && cp_remove(cp_add(v, g), g) == v;
    }
    o.require(cp_ok, "CP round trip");

    RunConfig cfg;
    cfg.snr_grid_db = {6};
    cfg.frames_per_point = 30;
    cfg.cdid.tolerance = 0.0;
    bool bounds = true;
    const FrameSimulator sim(cfg);
    const auto g = cfg.geometry(Waveform::OTFS);
    for (std::size_t f = 0; f < cfg.frames_per_point; ++f) {
        const auto draw = sim.draw(f);
        const auto G = build_channel_matrix(draw.realization, g.tx_len(), cfg.pulse, g.M);
        const auto x = map_indices(draw.symbol_indices, A);
        auto rng = make_stream(cfg.seed, f, StreamId::Noise, 0);
        const double N0 = noise_density(6.0);
        const auto rx = receive_front_end(add_awgn(G.apply(transmit(x, g).tx_samples), N0, rng), g, G);
        std::vector<CdidIterationTrace> trace;
        run_cdid(rx.otfs_frequency, TimeDomainFrequencyChannel(rx.channels->otfs_time), g.M, g.N, A, N0, cfg.cdid, x,
                 &trace);
        for (const auto& t : trace) {
            for (double v : t.fde.v_e) bounds = bounds && v >= 0.0 && v <= t.fde.v_z_bar * (1.0 + 1e-12);
            bounds = bounds && t.next.v_s_bar >= cfg.cdid.floor() && t.next.v_s_bar <= cfg.cdid.cap();
            bounds = bounds && t.time_to_dd.variance >= cfg.cdid.floor() && t.time_to_dd.variance <= cfg.cdid.cap();
        }
    }
    o.require(bounds, "variance bounds");

    cfg.threads = 1;
    const auto a = format_csv(run_sweep(cfg));
    cfg.threads = 0;
    const auto b = format_csv(run_sweep(cfg));
    o.require(a == b && !a.empty(), "byte-identical CSV");
    return o;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"C1 waveform ordering", waveform_ordering},
        {"C2 blockage CDF mass", blockage_mass},
        {"C3 degenerate exactness", degenerate_exactness},
        {"C4 circulant FDE exactness", circulant_exactness},
        {"C5 oracle equivalence", oracle_equivalence},
        {"C6 CDID iterative gain", cdid_gain},
        {"C7 metric calibration", metric_calibration},
        {"C8 invariants", invariants},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome out;
        try {
            out = check();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s %s: %s\n", out.pass ? "PASS" : "FAIL", name, out.detail.c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
