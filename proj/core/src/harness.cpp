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

#include "mcwave/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mcwave/equalization.hpp"
#include "mcwave/errors.hpp"
#include "mcwave/metrics.hpp"
#include "mcwave/modems.hpp"
#include "mcwave/random.hpp"
#include "mcwave/version.hpp"

namespace mcwave {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_real(std::string_view key, std::string_view v) {
    double out = 0.0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (v.empty() || ec != std::errc{} || ptr != end || !std::isfinite(out)) {
        throw ConfigError(std::string(key), "expected a finite number, got '" + std::string(v) + "'");
    }
    return out;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view v) {
    std::uint64_t out = 0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (v.empty() || ec != std::errc{} || ptr != end) {
        throw ConfigError(std::string(key), "expected a non-negative integer, got '" + std::string(v) + "'");
    }
    return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError(std::string(key), "expected true or false, got '" + std::string(v) + "'");
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string join_waveforms(const std::vector<Waveform>& ws) {
    std::string out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out += ',';
        out += to_string(ws[i]);
    }
    return out;
}

std::string join_reals(const std::vector<double>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ',';
        out += fmt(vs[i]);
    }
    return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

void RunConfig::validate() const {
    if (waveforms.empty()) throw ConfigError("waveforms", "at least one waveform is required");
    if (M == 0) throw ConfigError("frame.M", "must be positive");
    if (N == 0) throw ConfigError("frame.N", "must be positive");
    if (l_cp >= M) throw ConfigError("frame.l_cp", "must be smaller than frame.M");
    if (!(channel.q >= 0.0 && channel.q <= 1.0)) throw ConfigError("channel.q", "must lie in [0, 1]");
    if (!(channel.tau_max >= 0.0)) throw ConfigError("channel.tau_max", "must be >= 0");
    if (!(channel.nu_max >= 0.0)) throw ConfigError("channel.nu_max", "must be >= 0");
    if (channel.m_ap == 0) throw ConfigError("channel.m_ap", "must be positive");
    if (!(pulse.rolloff >= 0.0 && pulse.rolloff <= 1.0)) throw ConfigError("pulse.rolloff", "must lie in [0, 1]");
    if (pulse.truncation < 1) throw ConfigError("pulse.truncation", "must be positive");
    if (pulse.oversampling < 1) throw ConfigError("pulse.oversampling", "must be positive");
    if (cdid.max_iterations == 0) throw ConfigError("cdid.iterations", "must be positive");
    if (!(cdid.damping > 0.0 && cdid.damping <= 1.0)) throw ConfigError("cdid.damping", "must lie in (0, 1]");
    if (!(cdid.variance_floor > 0.0)) throw ConfigError("cdid.variance_floor", "must be positive");
    if (!(cdid.variance_cap > cdid.variance_floor)) throw ConfigError("cdid.variance_cap", "must exceed cdid.variance_floor");
    if (snr_grid_db.empty()) throw ConfigError("snr_db", "grid must not be empty");
    if (frames_per_point == 0) throw ConfigError("frames", "must be >= 1");
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
    const std::string k(key);
    const auto v = trim(value);
    if (key == "waveforms") {
        cfg.waveforms.clear();
        for (auto part : split(v, ',')) {
            try {
                cfg.waveforms.push_back(parse_waveform(part));
            } catch (const ArgumentError& e) {
                throw ConfigError(k, e.what());
            }
        }
    } else if (key == "frame.M") {
        cfg.M = parse_unsigned(key, v);
    } else if (key == "frame.N") {
        cfg.N = parse_unsigned(key, v);
    } else if (key == "frame.l_cp") {
        cfg.l_cp = parse_unsigned(key, v);
    } else if (key == "channel.q") {
        cfg.channel.q = parse_real(key, v);
    } else if (key == "channel.tau_max") {
        cfg.channel.tau_max = parse_real(key, v);
    } else if (key == "channel.nu_max") {
        cfg.channel.nu_max = parse_real(key, v);
    } else if (key == "channel.m_ap") {
        cfg.channel.m_ap = parse_unsigned(key, v);
    } else if (key == "pulse.rolloff") {
        cfg.pulse.rolloff = parse_real(key, v);
    } else if (key == "pulse.truncation") {
        cfg.pulse.truncation = static_cast<int>(parse_unsigned(key, v));
    } else if (key == "pulse.oversampling") {
        cfg.pulse.oversampling = static_cast<int>(parse_unsigned(key, v));
    } else if (key == "cdid.iterations") {
        cfg.cdid.max_iterations = parse_unsigned(key, v);
    } else if (key == "cdid.damping") {
        cfg.cdid.damping = parse_real(key, v);
    } else if (key == "cdid.variance_floor") {
        cfg.cdid.variance_floor = parse_real(key, v);
    } else if (key == "cdid.variance_cap") {
        cfg.cdid.variance_cap = parse_real(key, v);
    } else if (key == "snr_db") {
        cfg.snr_grid_db.clear();
        for (auto part : split(v, ',')) cfg.snr_grid_db.push_back(parse_real(key, part));
    } else if (key == "frames") {
        cfg.frames_per_point = parse_unsigned(key, v);
    } else if (key == "seed") {
        cfg.seed = parse_unsigned(key, v);
    } else if (key == "threads") {
        cfg.threads = parse_unsigned(key, v);
    } else if (key == "timing") {
        cfg.timing = parse_bool(key, v);
    } else if (key == "modulation") {
        if (v != "qpsk") throw ConfigError(k, "only qpsk is supported");
    } else if (key == "out") {
        cfg.out = std::string(v);
    } else if (key == "format") {
        if (v == "csv") {
            cfg.format = OutputFormat::Csv;
        } else if (v == "json") {
            cfg.format = OutputFormat::Json;
        } else {
            throw ConfigError(k, "expected csv or json");
        }
    } else {
        throw ConfigError(k, "unknown key");
    }
}

RunConfig parse_config(std::string_view text, RunConfig base) {
    std::size_t line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
        }
        apply_setting(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    base.validate();
    return base;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), std::move(base));
}

std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& cfg) {
    return {
        {"waveforms", join_waveforms(cfg.waveforms)},
        {"frame.M", std::to_string(cfg.M)},
        {"frame.N", std::to_string(cfg.N)},
        {"frame.l_cp", std::to_string(cfg.l_cp)},
        {"channel.q", fmt(cfg.channel.q)},
        {"channel.tau_max", fmt(cfg.channel.tau_max)},
        {"channel.nu_max", fmt(cfg.channel.nu_max)},
        {"channel.m_ap", std::to_string(cfg.channel.m_ap)},
        {"pulse.rolloff", fmt(cfg.pulse.rolloff)},
        {"pulse.truncation", std::to_string(cfg.pulse.truncation)},
        {"pulse.oversampling", std::to_string(cfg.pulse.oversampling)},
        {"cdid.iterations", std::to_string(cfg.cdid.max_iterations)},
        {"cdid.damping", fmt(cfg.cdid.damping)},
        {"cdid.variance_floor", fmt(cfg.cdid.variance_floor)},
        {"cdid.variance_cap", fmt(cfg.cdid.variance_cap)},
        {"modulation", "qpsk"},
        {"snr_db", join_reals(cfg.snr_grid_db)},
        {"frames", std::to_string(cfg.frames_per_point)},
        {"seed", std::to_string(cfg.seed)},
        {"threads", std::to_string(cfg.threads)},
        {"timing", cfg.timing ? "true" : "false"},
        {"format", cfg.format == OutputFormat::Json ? "json" : "csv"},
        {"out", cfg.out},
    };
}

double noise_density(double snr_db) noexcept { return 1.0 / std::pow(10.0, snr_db / 10.0); }

double symbol_efficiency(const FrameGeometry& geom) noexcept {
    return static_cast<double>(geom.info_symbols()) / static_cast<double>(geom.tx_len());
}

FrameSimulator::FrameSimulator(RunConfig cfg) : cfg_(std::move(cfg)), alphabet_(Alphabet::qpsk(1.0)) {
    cfg_.validate();
    cfg_.cdid.energy = alphabet_.energy;
}

FrameDraw FrameSimulator::draw(std::size_t frame) const {
    FrameDraw d;
    auto blockage = make_stream(cfg_.seed, frame, StreamId::Blockage);
    auto offsets = make_stream(cfg_.seed, frame, StreamId::Offsets);
    d.realization = sample_links(cfg_.channel, blockage, offsets);
    d.realization.rng_seed = cfg_.seed;

    auto bits = make_stream(cfg_.seed, frame, StreamId::Bits);
    const std::size_t count = cfg_.M * cfg_.N;
    d.symbol_indices.resize(count);
    for (auto& idx : d.symbol_indices) {
        std::size_t v = 0;
        for (std::size_t b = 0; b < alphabet_.bits_per_symbol; ++b) v = (v << 1) | static_cast<std::size_t>(bits() >> 63);
        idx = v;
    }
    return d;
}

std::vector<ResultRecord> FrameSimulator::run_frame(std::size_t frame) const {
    const auto d = draw(frame);
    std::size_t max_len = 0;
    for (auto w : cfg_.waveforms) max_len = std::max(max_len, cfg_.geometry(w).tx_len());
    const auto G = build_channel_matrix(d.realization, max_len, cfg_.pulse, cfg_.M);

    struct Chain {
        FrameGeometry geom;
        ComplexVector x;
        ComplexVector clean;
        std::shared_ptr<const RxChannels> channels;
        std::unique_ptr<TimeDomainFrequencyChannel> freq;
    };
    std::vector<Chain> chains;
    for (auto w : cfg_.waveforms) {
        Chain c;
        c.geom = cfg_.geometry(w);
        const std::size_t len = c.geom.tx_len();
        EffectiveChannelMatrix Gw{G.matrix.diagonal_block(0, len), G.lower, G.upper};
        const auto idx = std::span(d.symbol_indices).first(c.geom.info_symbols());
        c.x = map_indices(idx, alphabet_);
        c.clean = Gw.apply(transmit(c.x, c.geom).tx_samples);
        auto rx = std::make_shared<RxChannels>(prepare_rx_channels(Gw, c.geom));
        if (w == Waveform::OTFS) c.freq = std::make_unique<TimeDomainFrequencyChannel>(rx->otfs_time);
        c.channels = std::move(rx);
        chains.push_back(std::move(c));
    }

    const std::size_t S = cfg_.snr_grid_db.size();
    std::vector<ResultRecord> out(chains.size() * S);
    for (std::size_t s = 0; s < S; ++s) {
        const double snr = cfg_.snr_grid_db[s];
        const double N0 = noise_density(snr);
        auto noise_rng = make_stream(cfg_.seed, frame, StreamId::Noise, s);
        const auto unit_noise = add_awgn(ComplexVector(max_len), 1.0, noise_rng);
        const double scale = std::sqrt(N0);
        for (std::size_t w = 0; w < chains.size(); ++w) {
            const auto& c = chains[w];
            const auto t0 = std::chrono::steady_clock::now();
            ComplexVector y(c.clean.size());
            for (std::size_t i = 0; i < y.size(); ++i) y[i] = c.clean[i] + scale * unit_noise[i];
            const auto rx = receive_front_end(y, c.geom, c.channels);

            ResultRecord rec;
            rec.waveform = c.geom.waveform;
            rec.snr_db = snr;
            rec.q = cfg_.channel.q;
            rec.frame = frame;
            ComplexVector estimate;
            switch (c.geom.waveform) {
                case Waveform::SC: estimate = equalize_sc(rx, N0, alphabet_.energy); break;
                case Waveform::OFDM: estimate = equalize_ofdm(rx, N0, alphabet_.energy); break;
                case Waveform::OTFS: {
                    const auto res = run_cdid(rx.otfs_frequency, *c.freq, c.geom.M, c.geom.N, alphabet_, N0, cfg_.cdid);
                    estimate = res.dd_extrinsic.means;
                    rec.cdid_iters = res.iterations.size();
                    break;
                }
            }
            rec.capacity_bits = pragmatic_capacity(c.x, estimate, alphabet_);
            rec.ser = symbol_error_rate(c.x, estimate, alphabet_);
            rec.wall_ms = cfg_.timing ? elapsed_ms(t0) : 0.0;
            out[w * S + s] = rec;
        }
    }
    return out;
}

std::vector<ResultRecord> run_sweep(const RunConfig& cfg) {
    const FrameSimulator sim(cfg);
    const std::size_t F = cfg.frames_per_point;
    std::vector<std::vector<ResultRecord>> per_frame(F);

    std::size_t workers = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
    workers = std::min(workers, F);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    const auto work = [&] {
        for (std::size_t f = next++; f < F; f = next++) {
            try {
                per_frame[f] = sim.run_frame(f);
            } catch (...) {
                std::lock_guard lock(failure_lock);
                if (!failure) failure = std::current_exception();
                next = F;
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    const std::size_t W = cfg.waveforms.size();
    const std::size_t S = cfg.snr_grid_db.size();
    std::vector<ResultRecord> out;
    out.reserve(W * S * F);
    for (std::size_t w = 0; w < W; ++w)
        for (std::size_t s = 0; s < S; ++s)
            for (std::size_t f = 0; f < F; ++f) out.push_back(per_frame[f][w * S + s]);
    return out;
}

std::vector<std::pair<double, double>> aggregate_cdf(const std::vector<ResultRecord>& records, Waveform waveform,
                                                     double snr_db) {
    std::vector<double> values;
    for (const auto& r : records)
        if (r.waveform == waveform && r.snr_db == snr_db) values.push_back(r.capacity_bits);
    if (values.empty()) throw ArgumentError("aggregate_cdf: no records for the requested waveform and SNR");
    std::sort(values.begin(), values.end());
    std::vector<std::pair<double, double>> cdf(values.size());
    const auto n = static_cast<double>(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) cdf[k] = {values[k], static_cast<double>(k + 1) / n};
    return cdf;
}

std::vector<PointSummary> summarize(const std::vector<ResultRecord>& records, const RunConfig& cfg) {
    std::vector<PointSummary> out;
    for (auto w : cfg.waveforms) {
        const double eff = symbol_efficiency(cfg.geometry(w));
        for (double snr : cfg.snr_grid_db) {
            PointSummary p;
            p.waveform = w;
            p.snr_db = snr;
            double sum = 0.0;
            double sq = 0.0;
            for (const auto& r : records) {
                if (r.waveform != w || r.snr_db != snr) continue;
                ++p.frames;
                sum += r.capacity_bits;
                sq += r.capacity_bits * r.capacity_bits;
                p.mean_ser += r.ser;
                if (r.capacity_bits < 0.05) p.outage += 1.0;
            }
            if (p.frames == 0) continue;
            const auto n = static_cast<double>(p.frames);
            p.mean_capacity = sum / n;
            p.mean_ser /= n;
            p.outage /= n;
            p.mean_throughput = p.mean_capacity * eff;
            if (p.frames > 1) {
                const double var = std::max(sq - n * p.mean_capacity * p.mean_capacity, 0.0) / (n - 1.0);
                p.stderr_capacity = std::sqrt(var / n);
            }
            out.push_back(p);
        }
    }
    return out;
}

std::string format_csv(const std::vector<ResultRecord>& records) {
    std::string out = "waveform,snr_db,q,frame,capacity_bits,ser,cdid_iters,wall_ms\n";
    for (const auto& r : records) {
        out += to_string(r.waveform);
        out += ',' + fmt(r.snr_db) + ',' + fmt(r.q) + ',' + std::to_string(r.frame) + ',' + fmt(r.capacity_bits) + ',' +
               fmt(r.ser) + ',' + std::to_string(r.cdid_iters) + ',' + fmt(r.wall_ms) + '\n';
    }
    return out;
}

std::vector<ResultRecord> parse_csv(std::string_view text) {
    std::vector<ResultRecord> out;
    bool header = true;
    for (auto line : split(text, '\n')) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 8) throw ArgumentError("parse_csv: expected 8 columns in '" + std::string(line) + "'");
        ResultRecord r;
        r.waveform = parse_waveform(f[0]);
        r.snr_db = parse_real("snr_db", f[1]);
        r.q = parse_real("q", f[2]);
        r.frame = parse_unsigned("frame", f[3]);
        r.capacity_bits = parse_real("capacity_bits", f[4]);
        r.ser = parse_real("ser", f[5]);
        r.cdid_iters = parse_unsigned("cdid_iters", f[6]);
        r.wall_ms = parse_real("wall_ms", f[7]);
        out.push_back(r);
    }
    return out;
}

std::string format_json(const std::vector<ResultRecord>& records, const RunConfig& cfg) {
    nlohmann::ordered_json doc;
    doc["version"] = kVersion;
    auto& echo = doc["config"];
    echo = nlohmann::ordered_json::object();
    for (const auto& [k, v] : config_entries(cfg)) echo[k] = v;
    auto& summary = doc["summary"];
    summary = nlohmann::ordered_json::array();
    for (const auto& p : summarize(records, cfg)) {
        summary.push_back({{"waveform", to_string(p.waveform)},
                           {"snr_db", p.snr_db},
                           {"frames", p.frames},
                           {"mean_capacity_bits", p.mean_capacity},
                           {"stderr_capacity_bits", p.stderr_capacity},
                           {"mean_ser", p.mean_ser},
                           {"mean_throughput_bits_per_sample", p.mean_throughput},
                           {"outage_fraction", p.outage}});
    }
    auto& recs = doc["records"];
    recs = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        recs.push_back({{"waveform", to_string(r.waveform)},
                        {"snr_db", r.snr_db},
                        {"q", r.q},
                        {"frame", r.frame},
                        {"capacity_bits", r.capacity_bits},
                        {"ser", r.ser},
                        {"cdid_iters", r.cdid_iters},
                        {"wall_ms", r.wall_ms}});
    }
    return doc.dump(2) + "\n";
}

void emit(const std::vector<ResultRecord>& records, const RunConfig& cfg, OutputFormat format,
          const std::filesystem::path& path) {
    const std::string text = format == OutputFormat::Csv ? format_csv(records) : format_json(records, cfg);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace mcwave
