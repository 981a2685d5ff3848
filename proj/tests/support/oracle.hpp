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
#include <random>
#include <vector>

#include "mcwave/mcwave.hpp"

// Reference implementations built from materialized matrices and brute-force sums. They share
// nothing with the library beyond the basic container types.
namespace oracle {

using mcwave::Complex;
using mcwave::ComplexMatrix;
using mcwave::ComplexVector;

ComplexVector random_vector(std::size_t n, std::uint64_t seed);
ComplexVector random_qpsk(std::size_t n, std::uint64_t seed);
ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed);

/// Unitary DFT matrix evaluated in long double.
ComplexMatrix dft_matrix(std::size_t n);
ComplexMatrix identity(std::size_t n);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix block_diag(const ComplexMatrix& block, std::size_t count);
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexVector apply(const ComplexMatrix& a, const ComplexVector& x);
double max_diff(const ComplexVector& a, const ComplexVector& b);
double max_diff(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix sub_block(const ComplexMatrix& a, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols);

/// (L + l) x L prefix insertion and L x (L + l) prefix removal, as 0/1 matrices.
ComplexMatrix cp_add_matrix(std::size_t L, std::size_t l);
ComplexMatrix cp_remove_matrix(std::size_t L, std::size_t l);

/// Closed-form root-raised-cosine sample with unit energy.
double rrc(double t, double rolloff);
/// Time-domain trapezoid of p(t) p(t - tau) exp(-j 2 pi nu (t - tau)) over [-span, span].
Complex ambiguity_trapezoid(double rolloff, double tau, double nu, double span = 400.0, int per_symbol = 64);

/// Entry-by-entry sum over links of the effective gain, using the library ambiguity kernel.
ComplexMatrix brute_force_channel(const mcwave::ChannelRealization& r, std::size_t length,
                                  const mcwave::PulseShape& pulse, std::size_t M);

/// Materialized end-to-end chains for one waveform.
struct DensePipeline {
    ComplexVector tx;
    ComplexVector y;
    ComplexVector stripped;
    std::vector<ComplexVector> domain;       // per block (SC/OFDM) or single DD vector (OTFS)
    std::vector<ComplexMatrix> block_freq;   // SC/OFDM
    ComplexMatrix otfs_time;                 // OTFS
    ComplexMatrix otfs_freq;                 // OTFS
    ComplexVector otfs_q;                    // OTFS
    ComplexVector equalized;                 // SC/OFDM
};

DensePipeline dense_pipeline(const mcwave::FrameGeometry& geom, const ComplexMatrix& G, const ComplexVector& x,
                             const ComplexVector& noise, double N0);

/// Literal CDID iteration with materialized matrices; returns one trace entry per iteration.
struct DenseCdidStep {
    ComplexVector z_bar, weights, q_bar, z_hat, s_hat, s_td, x_bar, x_hat, s_dt, s_bar_next;
    std::vector<double> v_e;
    double v_s_hat = 0, v_td = 0, v_dt = 0, v_s_bar_next = 0;
};
std::vector<DenseCdidStep> dense_cdid(const ComplexVector& q, const ComplexMatrix& H, std::size_t M, std::size_t N,
                                      double N0, std::size_t iterations, double floor = 1e-8, double cap = 1e8);

/// QPSK-constrained AWGN capacity (bits) by 2-D Gauss-Hermite integration, unit symbol energy.
double qpsk_capacity_gauss_hermite(double snr_db, int nodes = 80);

/// Gaussian tail Q(x).
double q_function(double x);

}  // namespace oracle
