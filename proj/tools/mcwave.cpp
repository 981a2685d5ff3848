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

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "mcwave/mcwave.hpp"

namespace {

constexpr int kConfigExit = 2;
constexpr int kIoExit = 3;

struct RunFlags {
    std::string config;
    std::optional<std::string> waveforms, snr, frames, q, seed, out, format, cdid_iters, threads;
    bool timing = false;
    bool summary = false;
};

mcwave::RunConfig resolve(const RunFlags& f) {
    mcwave::RunConfig cfg;
    if (!f.config.empty()) cfg = mcwave::load_config(f.config);
    const std::pair<const char*, const std::optional<std::string>*> overrides[] = {
        {"waveforms", &f.waveforms}, {"snr_db", &f.snr},      {"frames", &f.frames},
        {"channel.q", &f.q},         {"seed", &f.seed},       {"out", &f.out},
        {"format", &f.format},       {"cdid.iterations", &f.cdid_iters}, {"threads", &f.threads},
    };
    for (const auto& [key, value] : overrides)
        if (*value) mcwave::apply_setting(cfg, key, **value);
    if (f.timing) cfg.timing = true;
    cfg.validate();
    return cfg;
}

void print_summary(const std::vector<mcwave::ResultRecord>& records, const mcwave::RunConfig& cfg) {
    std::cerr << "waveform snr_db frames capacity stderr ser throughput outage\n";
    for (const auto& s : mcwave::summarize(records, cfg)) {
        std::cerr << std::left << std::setw(8) << mcwave::to_string(s.waveform) << std::right << std::fixed
                  << std::setprecision(2) << std::setw(7) << s.snr_db << std::setw(7) << s.frames
                  << std::setprecision(4) << std::setw(9) << s.mean_capacity << std::setw(8) << s.stderr_capacity
                  << std::setw(8) << s.mean_ser << std::setw(11) << s.mean_throughput << std::setw(8) << s.outage
                  << '\n';
    }
}

int run(const RunFlags& flags) {
    const auto cfg = resolve(flags);
    const auto records = mcwave::run_sweep(cfg);
    if (cfg.out.empty() || cfg.out == "-") {
        std::cout << (cfg.format == mcwave::OutputFormat::Csv ? mcwave::format_csv(records)
                                                              : mcwave::format_json(records, cfg));
    } else {
        mcwave::emit(records, cfg, cfg.format, cfg.out);
    }
    if (flags.summary) print_summary(records, cfg);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo link simulator for SC, OFDM and OTFS over multi-AP channels"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(mcwave::kVersion));

    RunFlags flags;
    auto* run_cmd = app.add_subcommand("run", "Run an SNR sweep and write per-frame records");
    run_cmd->add_option("--config", flags.config, "Config file with key = value lines");
    run_cmd->add_option("--waveforms", flags.waveforms, "Comma separated subset of SC,OFDM,OTFS");
    run_cmd->add_option("--snr", flags.snr, "Comma separated SNR grid in dB");
    run_cmd->add_option("--frames", flags.frames, "Frames per SNR point");
    run_cmd->add_option("--q", flags.q, "Per-link blockage probability");
    run_cmd->add_option("--seed", flags.seed, "Master seed");
    run_cmd->add_option("--out", flags.out, "Output path, '-' for stdout");
    run_cmd->add_option("--format", flags.format, "csv or json");
    run_cmd->add_option("--cdid-iters", flags.cdid_iters, "CDID iteration count");
    run_cmd->add_option("--threads", flags.threads, "Worker threads, 0 for all cores");
    run_cmd->add_flag("--timing", flags.timing, "Record detector wall time per frame");
    run_cmd->add_flag("--summary", flags.summary, "Print per-point means to stderr");

    std::string scale = "tiny";
    std::uint64_t seed = 1;
    std::string dir = ".";
    auto* fixture_cmd = app.add_subcommand("fixture", "Write a golden JSON fixture");
    fixture_cmd->add_option("--scale", scale, "tiny or small");
    fixture_cmd->add_option("--seed", seed, "Seed");
    fixture_cmd->add_option("--dir", dir, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kConfigExit;
    }

    try {
        if (run_cmd->parsed()) return run(flags);
        const auto path = mcwave::write_fixture(mcwave::parse_fixture_scale(scale), seed, dir);
        std::cout << path.string() << '\n';
        return 0;
    } catch (const mcwave::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigExit;
    } catch (const mcwave::ArgumentError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigExit;
    } catch (const mcwave::IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kIoExit;
    }
}
