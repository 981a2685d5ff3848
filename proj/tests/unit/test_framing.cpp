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

#include "oracle.hpp"

using namespace mcwave;

TEST_CASE("frame geometry lengths", "[framing]") {
    const FrameGeometry sc{Waveform::SC, 32, 16, 3};
    CHECK(sc.info_per_block() == 29);
    CHECK(sc.block_count() == 16);
    CHECK(sc.total_cp() == 48);
    CHECK(sc.tx_len() == 512);
    CHECK(sc.info_symbols() == 464);

    const FrameGeometry ofdm{Waveform::OFDM, 32, 16, 3};
    CHECK(ofdm.tx_len() == 512);
    CHECK(ofdm.info_symbols() == 464);

    const FrameGeometry otfs{Waveform::OTFS, 32, 16, 3};
    CHECK(otfs.info_per_block() == 512);
    CHECK(otfs.block_count() == 1);
    CHECK(otfs.total_cp() == 3);
    CHECK(otfs.tx_len() == 515);

    for (const auto& g : {sc, ofdm, otfs}) CHECK(g.total_cp() + g.info_symbols() == g.tx_len());
    CHECK(3.0 / 515.0 < 48.0 / 512.0);
    CHECK_THROWS_AS((FrameGeometry{Waveform::SC, 4, 4, 4}.validate()), ArgumentError);
}

TEST_CASE("cp_add copies block tails", "[framing]") {
    const ComplexVector x{1.0, 2.0, 3.0, 4.0};
    const FrameGeometry one{Waveform::SC, 6, 1, 2};
    CHECK(cp_add(x, one) == ComplexVector{3.0, 4.0, 1.0, 2.0, 3.0, 4.0});

    const FrameGeometry none{Waveform::SC, 4, 1, 0};
    CHECK(cp_add(x, none) == x);

    const FrameGeometry sc{Waveform::SC, 32, 16, 3};
    CHECK(cp_add(ComplexVector(464), sc).size() == 512);
    CHECK_THROWS_AS(cp_add(ComplexVector(463), sc), DimensionError);
}

TEST_CASE("cp_remove is the left inverse of cp_add", "[framing][property]") {
    for (auto w : {Waveform::SC, Waveform::OFDM, Waveform::OTFS}) {
        for (std::size_t l : {0, 1, 3}) {
            const FrameGeometry g{w, 8, 4, l};
            const auto x = oracle::random_vector(g.info_symbols(), 17 + l);
            CHECK(cp_remove(cp_add(x, g), g) == x);
        }
    }
    const FrameGeometry otfs{Waveform::OTFS, 32, 16, 3};
    CHECK(cp_remove(ComplexVector(515), otfs).size() == 512);
    CHECK_THROWS_AS(cp_remove(ComplexVector(512), otfs), DimensionError);
}

TEST_CASE("CP index maps match 0/1 matrices", "[framing]") {
    const FrameGeometry sc{Waveform::SC, 8, 4, 2};
    const auto A = oracle::block_diag(oracle::cp_add_matrix(6, 2), 4);
    const auto R = oracle::block_diag(oracle::cp_remove_matrix(6, 2), 4);
    const auto x = oracle::random_vector(24, 3);
    CHECK(oracle::max_diff(cp_add(x, sc), oracle::apply(A, x)) == 0.0);
    const auto y = oracle::random_vector(32, 4);
    CHECK(oracle::max_diff(cp_remove(y, sc), oracle::apply(R, y)) == 0.0);

    const FrameGeometry otfs{Waveform::OTFS, 4, 4, 1};
    const auto xo = oracle::random_vector(16, 5);
    CHECK(oracle::max_diff(cp_add(xo, otfs), oracle::apply(oracle::cp_add_matrix(16, 1), xo)) == 0.0);
}

TEST_CASE("block split and concat", "[framing]") {
    const FrameGeometry otfs{Waveform::OTFS, 4, 4, 1};
    const auto x = oracle::random_vector(16, 1);
    const auto one = block_split(x, otfs);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == x);

    const FrameGeometry sc{Waveform::SC, 32, 16, 3};
    const auto info = oracle::random_vector(464, 2);
    const auto blocks = block_split(info, sc);
    CHECK(blocks.size() == 16);
    for (const auto& b : blocks) CHECK(b.size() == 29);
    CHECK(concat(blocks) == info);
    CHECK_THROWS_AS(block_split(ComplexVector(465), sc), DimensionError);
}

TEST_CASE("integer delay within the CP is circulant after folding", "[framing][property]") {
    const std::size_t L = 29;
    const std::size_t l = 3;
    for (std::size_t d = 0; d <= l; ++d) {
        ComplexMatrix shift(L + l, L + l);
        for (std::size_t i = d; i < L + l; ++i) shift(i, i - d) = 1.0;
        const auto folded = oracle::multiply(oracle::cp_remove_matrix(L, l),
                                             oracle::multiply(shift, oracle::cp_add_matrix(L, l)));
        const auto H = conjugate_by_dft(folded);
        double off = 0.0;
        for (std::size_t r = 0; r < L; ++r)
            for (std::size_t c = 0; c < L; ++c)
                if (r != c) off = std::max(off, std::abs(H(r, c)));
        CHECK(off < 1e-12);
    }
}

TEST_CASE("waveform names", "[framing]") {
    CHECK(parse_waveform("otfs") == Waveform::OTFS);
    CHECK(parse_waveform("Sc") == Waveform::SC);
    CHECK(to_string(Waveform::OFDM) == "OFDM");
    CHECK_THROWS_AS(parse_waveform("fbmc"), ArgumentError);
}
