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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oracle.hpp"

using namespace mcwave;
using Json = nlohmann::json;

namespace {

Json load(const std::string& name) {
    std::ifstream in(std::filesystem::path(MCWAVE_FIXTURE_DIR) / name);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return Json::parse(ss.str());
}

ComplexVector vec(const Json& j) {
    ComplexVector out;
    for (const auto& e : j) out.emplace_back(e[0].get<double>(), e[1].get<double>());
    return out;
}

ComplexMatrix mat(const Json& j) {
    ComplexMatrix out(j.size(), j.at(0).size());
    for (std::size_t r = 0; r < j.size(); ++r)
        for (std::size_t c = 0; c < j[r].size(); ++c) out(r, c) = Complex(j[r][c][0].get<double>(), j[r][c][1].get<double>());
    return out;
}

// Largest absolute difference between two JSON trees of identical shape; +inf on a shape mismatch.
double tree_diff(const Json& a, const Json& b) {
    if (a.type() != b.type() && !(a.is_number() && b.is_number())) return INFINITY;
    if (a.is_number()) return std::abs(a.get<double>() - b.get<double>());
    if (a.is_array()) {
        if (a.size() != b.size()) return INFINITY;
        double d = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, tree_diff(a[i], b[i]));
        return d;
    }
    if (a.is_object()) {
        if (a.size() != b.size()) return INFINITY;
        double d = 0.0;
        for (auto it = a.begin(); it != a.end(); ++it) {
            if (!b.contains(it.key())) return INFINITY;
            d = std::max(d, tree_diff(it.value(), b[it.key()]));
        }
        return d;
    }
    return a == b ? 0.0 : INFINITY;
}

ChannelRealization links_of(const Json& doc) {
    ChannelRealization r;
    for (const auto& l : doc["links"]) r.links.push_back({l["blocked"].get<bool>(), l["tau"].get<double>(), l["nu"].get<double>()});
    return r;
}

}  // namespace

TEST_CASE("committed fixtures regenerate", "[fixtures]") {
    for (auto scale : {FixtureScale::Tiny, FixtureScale::Small}) {
        const auto name = "fixture_" + std::string(to_string(scale)) + "_1.json";
        INFO(name);
        const auto committed = load(name);
        const auto fresh = Json::parse(generate_fixture_json(scale, 1));
        CHECK(tree_diff(committed, fresh) < 1e-12);
        CHECK(generate_fixture_json(scale, 1) == generate_fixture_json(scale, 1));
    }
    CHECK(generate_fixture_json(FixtureScale::Tiny, 1) != generate_fixture_json(FixtureScale::Tiny, 2));
    CHECK_THROWS_AS(parse_fixture_scale("huge"), ArgumentError);
    CHECK(parse_fixture_scale("small") == FixtureScale::Small);
}

TEST_CASE("tiny fixture shape and checksum", "[fixtures]") {
    const auto doc = load("fixture_tiny_1.json");
    const auto H = mat(doc["waveforms"]["OTFS"]["H_otfs"]);
    CHECK(H.rows() == 16);
    CHECK(H.cols() == 16);
    Complex sum{0.0, 0.0};
    for (std::size_t r = 0; r < 16; ++r)
        for (std::size_t c = 0; c < 16; ++c) sum += H(r, c) * static_cast<double>(r * 16 + c + 1);
    const auto stored = vec(Json::array({doc["waveforms"]["OTFS"]["H_checksum"]}))[0];
    CHECK(std::abs(sum - stored) < 1e-10);
    CHECK(doc["links"].size() == 2);
    CHECK(doc["waveforms"]["SC"]["H_blocks"].size() == 4);
}

TEST_CASE("fixture channel matrices match the brute-force sum", "[fixtures]") {
    for (const char* name : {"fixture_tiny_1.json", "fixture_small_1.json"}) {
        const auto doc = load(name);
        const auto r = links_of(doc);
        PulseShape pulse;
        pulse.rolloff = doc["pulse"]["rolloff"];
        pulse.truncation = doc["pulse"]["truncation"];
        pulse.oversampling = doc["pulse"]["oversampling"];
        const std::size_t M = doc["geometry"]["M"];
        for (const char* w : {"SC", "OFDM", "OTFS"}) {
            const auto G = mat(doc["waveforms"][w]["G"]);
            CHECK(oracle::max_diff(G, oracle::brute_force_channel(r, G.rows(), pulse, M)) < 1e-12);
        }
    }
}

TEST_CASE("fixture CDID trace follows the formulas", "[fixtures]") {
    const auto doc = load("fixture_tiny_1.json");
    const auto H = mat(doc["waveforms"]["OTFS"]["H_otfs"]);
    const double N0 = doc["n0"];
    const auto& first = doc["cdid"]["iterations"][0];
    const auto w = vec(first["weights"]);
    for (std::size_t l = 0; l < 16; ++l) {
        double row = 0.0;
        for (std::size_t j = 0; j < 16; ++j) row += std::norm(H(l, j));
        CHECK(std::abs(w[l] - std::conj(H(l, l)) / (row + N0)) < 1e-12);
    }

    const auto q = vec(doc["cdid"]["q"]);
    const auto ref = oracle::dense_cdid(q, H, 4, 4, N0, doc["cdid"]["iterations"].size());
    for (std::size_t it = 0; it < ref.size(); ++it) {
        const auto& t = doc["cdid"]["iterations"][it];
        CHECK(oracle::max_diff(vec(t["z_hat"]), ref[it].z_hat) < 1e-10);
        CHECK(oracle::max_diff(vec(t["x_hat"]), ref[it].x_hat) < 1e-9);
        CHECK(std::abs(t["v_td"].get<double>() - ref[it].v_td) <= 1e-9 * ref[it].v_td);
    }
}

TEST_CASE("write_fixture writes the generated document", "[fixtures]") {
    const auto dir = std::filesystem::temp_directory_path() / "mcwave_fixture_test";
    const auto path = write_fixture(FixtureScale::Tiny, 3, dir);
    CHECK(path.filename() == "fixture_tiny_3.json");
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == generate_fixture_json(FixtureScale::Tiny, 3));
    std::filesystem::remove_all(dir);
    CHECK_THROWS_AS(write_fixture(FixtureScale::Tiny, 3, "/proc/no/such/dir"), IoError);
}
