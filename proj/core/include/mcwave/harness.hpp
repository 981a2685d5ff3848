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
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcwave/cdid.hpp"
#include "mcwave/channel.hpp"
#include "mcwave/framing.hpp"
#include "mcwave/mapping.hpp"
#include "mcwave/pulse.hpp"

namespace mcwave {

enum class OutputFormat { Csv, Json };

struct RunConfig {
    std::vector<Waveform> waveforms{Waveform::SC, Waveform::OFDM, Waveform::OTFS};
    std::size_t M = 32;
    std::size_t N = 16;
    std::size_t l_cp = 3;
    ChannelParams channel;
    PulseShape pulse;
    CdidConfig cdid;
    std::vector<double> snr_grid_db{0, 2, 4, 6, 8, 10, 12, 14};
    std::size_t frames_per_point = 100;
    std::uint64_t seed = 1;
    /// Worker threads for run_sweep; 0 picks the hardware concurrency.
    std::size_t threads = 1;
    /// Record per-frame detector wall time; off keeps outputs byte-reproducible.
    bool timing = false;
    std::string out;
    OutputFormat format = OutputFormat::Csv;

    /// Throws ConfigError naming the first offending key.
    void validate() const;
    FrameGeometry geometry(Waveform w) const { return {w, M, N, l_cp}; }
};

/// Sets one key; throws ConfigError on unknown keys or unparsable values.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);
/// Flat "key = value" lines, '#' starts a comment.
RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});
/// Every key with its current value, in apply_setting syntax.
std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& cfg);

/// E_s / 10^(snr_db / 10) with unit symbol energy.
double noise_density(double snr_db) noexcept;

struct ResultRecord {
    Waveform waveform = Waveform::SC;
    double snr_db = 0.0;
    double q = 0.0;
    std::size_t frame = 0;
    double capacity_bits = 0.0;
    double ser = 0.0;
    std::size_t cdid_iters = 0;
    double wall_ms = 0.0;
};

/// Information symbols per transmitted sample, used to turn capacity into throughput.
double symbol_efficiency(const FrameGeometry& geom) noexcept;

/// Everything drawn for one frame index. Shared by all waveforms and SNR points.
struct FrameDraw {
    ChannelRealization realization;
    std::vector<std::size_t> symbol_indices;
};

class FrameSimulator {
public:
    explicit FrameSimulator(RunConfig cfg);

    const RunConfig& config() const noexcept { return cfg_; }
    FrameDraw draw(std::size_t frame) const;
    /// Records for every configured waveform and SNR point, ordered by waveform then SNR.
    std::vector<ResultRecord> run_frame(std::size_t frame) const;

private:
    RunConfig cfg_;
    Alphabet alphabet_;
};

/// Records ordered by (waveform, SNR, frame) regardless of thread scheduling.
std::vector<ResultRecord> run_sweep(const RunConfig& cfg);

/// Sorted (capacity, k/n) pairs for one waveform and SNR point.
std::vector<std::pair<double, double>> aggregate_cdf(const std::vector<ResultRecord>& records, Waveform waveform,
                                                     double snr_db);

struct PointSummary {
    Waveform waveform = Waveform::SC;
    double snr_db = 0.0;
    std::size_t frames = 0;
    double mean_capacity = 0.0;
    double stderr_capacity = 0.0;
    double mean_ser = 0.0;
    /// mean_capacity * symbol_efficiency.
    double mean_throughput = 0.0;
    /// Fraction of frames below 0.05 bits/symbol.
    double outage = 0.0;
};

std::vector<PointSummary> summarize(const std::vector<ResultRecord>& records, const RunConfig& cfg);

std::string format_csv(const std::vector<ResultRecord>& records);
std::vector<ResultRecord> parse_csv(std::string_view text);
std::string format_json(const std::vector<ResultRecord>& records, const RunConfig& cfg);

/// Writes records in the requested format; throws IoError carrying the path.
void emit(const std::vector<ResultRecord>& records, const RunConfig& cfg, OutputFormat format,
          const std::filesystem::path& path);

}  // namespace mcwave
