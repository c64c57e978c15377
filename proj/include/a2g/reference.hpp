// SPDX-License-Identifier: Apache-2.0
//
// a2gchan - air-to-ground massive-MIMO channel synthesis and stationarity analysis
// Copyright (C) 2026 the a2gchan authors
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
// ------------------------------------------------------------------------

#pragma once

#include "a2g/frequency.hpp"
#include "a2g/pdp.hpp"
#include "a2g/temporal.hpp"

// Straight-line serial implementations of the analysis kernels, written as
// direct transcriptions of the definitions: plain summation DFT, nested-loop
// averages and outer products, no FFT library and no threading. Tests check
// the production kernels against these, and the benchmark tool compares
// runtimes.
namespace a2g::ref {

/// Unitary inverse DFT by direct O(F^2) summation.
std::vector<cd> impulse_response(const CsiTensor& tensor);

/// Window + antenna mean by direct nested loops.
PdpSeries averaged_pdp(const CsiTensor& tensor, std::size_t window);

/// Triple-loop outer-product accumulation of the antenna correlation matrix.
HermitianMatrix antenna_corr(const CsiTensor& tensor, std::size_t t_index, std::size_t window,
                             std::size_t band_begin, std::size_t band_end);

/// Per-lag products summed directly.
FreqCorr freq_corr(const CsiTensor& tensor, std::size_t t_index, std::size_t window);

/// Serial pairwise map built on ref::antenna_corr.
CmdMap cmd_map(const CsiTensor& tensor, std::span<const Vec3> positions, CmdAxis axis,
               const CmdMapParams& params, const TrajectoryFrame& frame);

}  // namespace a2g::ref
