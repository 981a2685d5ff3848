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

#include "mcwave/modems.hpp"
#include "mcwave/numerics.hpp"

namespace mcwave {

/// W[l] = Es conj(h_ll) / (Es sum_j |h_lj|^2 + N0). A zero row gives W[l] = 0.
ComplexVector mmse_weights(const ComplexMatrix& H, double N0, double Es = 1.0);

/// Single-tap MMSE per block, back to time, blocks concatenated.
ComplexVector equalize_sc(const RxFrame& rx, double N0, double Es = 1.0);
/// Single-tap MMSE per block in the subcarrier domain.
ComplexVector equalize_ofdm(const RxFrame& rx, double N0, double Es = 1.0);

}  // namespace mcwave
