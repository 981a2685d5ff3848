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

#include "mcwave/fixtures.hpp"

#include <fstream>

#include <json.hpp>

#include "mcwave/cdid.hpp"
#include "mcwave/channel.hpp"
#include "mcwave/errors.hpp"
#include "mcwave/harness.hpp"
#include "mcwave/modems.hpp"
#include "mcwave/random.hpp"

namespace mcwave {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kFixtureSnrDb = 10.0;
constexpr std::size_t kFixtureIterations = 3;

Json to_json(Complex v) { return Json::array({v.real(), v.imag()}); }

Json to_json(std::span<const Complex> v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Json to_json(const ComplexMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

Complex checksum(const ComplexMatrix& m) {
    Complex acc{0.0, 0.0};
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * static_cast<double>(r * m.cols() + c + 1);
    return acc;
}

ComplexMatrix dense_of(const SparseMatrix& s) {
    ComplexMatrix out(s.rows(), s.cols());
    for (std::size_t r = 0; r < s.rows(); ++r)
        for (const auto& e : s.row(r)) out(r, e.col) = e.value;
    return out;
}

}  // namespace

FixtureScale parse_fixture_scale(std::string_view name) {
    if (name == "tiny") return FixtureScale::Tiny;
    if (name == "small") return FixtureScale::Small;
    throw ArgumentError("unknown fixture scale '" + std::string(name) + "'");
}

std::string_view to_string(FixtureScale scale) noexcept { return scale == FixtureScale::Tiny ? "tiny" : "small"; }

std::string generate_fixture_json(FixtureScale scale, std::uint64_t seed) {
    RunConfig cfg;
    cfg.M = scale == FixtureScale::Tiny ? 4 : 8;
    cfg.N = 4;
    cfg.l_cp = 1;
    cfg.channel.m_ap = 2;
    cfg.channel.q = 0.0;
    cfg.seed = seed;
    cfg.snr_grid_db = {kFixtureSnrDb};
    cfg.cdid.max_iterations = kFixtureIterations;
    cfg.cdid.tolerance = 0.0;
    const FrameSimulator sim(cfg);
    const auto draw = sim.draw(0);
    const auto alphabet = Alphabet::qpsk();
    const double N0 = noise_density(kFixtureSnrDb);

    Json doc;
    doc["scale"] = to_string(scale);
    doc["seed"] = seed;
    doc["geometry"] = {{"M", cfg.M}, {"N", cfg.N}, {"l_cp", cfg.l_cp}};
    doc["pulse"] = {{"rolloff", cfg.pulse.rolloff},
                    {"truncation", cfg.pulse.truncation},
                    {"oversampling", cfg.pulse.oversampling}};
    doc["snr_db"] = kFixtureSnrDb;
    doc["n0"] = N0;
    Json links = Json::array();
    for (const auto& l : draw.realization.links) links.push_back({{"blocked", l.blocked}, {"tau", l.tau}, {"nu", l.nu}});
    doc["links"] = links;

    Json waveforms = Json::object();
    for (auto w : {Waveform::SC, Waveform::OFDM, Waveform::OTFS}) {
        const auto geom = cfg.geometry(w);
        const auto G = build_channel_matrix(draw.realization, geom.tx_len(), cfg.pulse, cfg.M);
        const auto ch = prepare_rx_channels(G, geom, true);
        Json entry;
        entry["G"] = to_json(G.matrix);
        entry["G_checksum"] = to_json(checksum(G.matrix));
        if (w == Waveform::OTFS) {
            entry["G_otfs"] = to_json(dense_of(ch.otfs_time));
            entry["H_otfs"] = to_json(ch.otfs_freq);
            entry["H_checksum"] = to_json(checksum(ch.otfs_freq));
        } else {
            Json blocks = Json::array();
            for (const auto& H : ch.block_freq) blocks.push_back(to_json(H));
            entry["H_blocks"] = blocks;
        }
        waveforms[std::string(to_string(w))] = entry;
    }
    doc["waveforms"] = waveforms;

    const auto geom = cfg.geometry(Waveform::OTFS);
    const auto x = map_indices(draw.symbol_indices, alphabet);
    const auto G = build_channel_matrix(draw.realization, geom.tx_len(), cfg.pulse, cfg.M);
    auto noise_rng = make_stream(seed, 0, StreamId::Noise, 0);
    const auto y = add_awgn(G.apply(otfs_transmit(x, geom).tx_samples), N0, noise_rng);
    const auto rx = receive_front_end(y, geom, G);
    std::vector<CdidIterationTrace> trace;
    run_cdid(rx.otfs_frequency, rx.channels->otfs_freq, cfg.M, cfg.N, alphabet, N0, cfg.cdid, x, &trace);

    Json cdid;
    cdid["x"] = to_json(x);
    cdid["q"] = to_json(rx.otfs_frequency);
    Json iters = Json::array();
    for (const auto& t : trace) {
        iters.push_back({{"z_bar", to_json(t.fde.z_bar)},
                         {"v_z_bar", t.fde.v_z_bar},
                         {"weights", to_json(t.fde.weights)},
                         {"q_bar", to_json(t.fde.q_bar)},
                         {"z_hat", to_json(t.fde.z_hat)},
                         {"v_e", t.fde.v_e},
                         {"s_hat", to_json(t.s_hat)},
                         {"v_s_hat", t.v_s_hat},
                         {"s_td", to_json(t.time_to_dd.means)},
                         {"v_td", t.time_to_dd.variance},
                         {"x_bar", to_json(t.dd_prior.means)},
                         {"x_hat", to_json(t.app.means)},
                         {"s_dt", to_json(t.dd_posterior_time.means)},
                         {"v_dt", t.dd_posterior_time.variance},
                         {"s_bar_next", to_json(t.next.s_bar)},
                         {"v_s_bar_next", t.next.v_s_bar}});
    }
    cdid["iterations"] = iters;
    doc["cdid"] = cdid;
    return doc.dump(1) + "\n";
}

std::filesystem::path write_fixture(FixtureScale scale, std::uint64_t seed, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto path = dir / ("fixture_" + std::string(to_string(scale)) + "_" + std::to_string(seed) + ".json");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << generate_fixture_json(scale, seed);
    if (!out) throw IoError("failed writing " + path.string());
    return path;
}

}  // namespace mcwave
