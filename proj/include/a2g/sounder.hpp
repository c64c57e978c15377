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

#include <cstdint>
#include <span>
#include <vector>

#include "a2g/scene.hpp"
#include "a2g/tensor.hpp"

namespace a2g {

/// Constant-modulus sounding pilot.
struct PilotSequence {
    std::uint32_t root = 25;
    std::vector<cd> samples;

    std::size_t length() const { return samples.size(); }
};

/// Zadoff-Chu sequence x_k = exp(-j*pi*root*k*(k+1)/N) for odd N, with k*(k+1)
/// replaced by k^2 for even N. Throws config_error unless 0 < root < N and
/// gcd(root, N) = 1.
PilotSequence zadoff_chu(std::uint32_t root, std::uint32_t length);

struct SyncResult {
    bool detected = false;
    std::size_t offset = 0;
    double peak_metric = 0.0;  // normalized cross-correlation in [0, 1]
    double threshold = 0.0;
};

inline constexpr double kDefaultSyncThreshold = 0.7;

/// Frame-start search: normalized complex cross-correlation against the
/// reference, peak picked over all alignments. detected is false when the
/// peak metric stays below the threshold.
SyncResult pss_detect(std::span<const cd> received, const PilotSequence& reference,
                      double threshold = kDefaultSyncThreshold);

/// Per-subcarrier least-squares estimate H(m, f) = rx(m, f) / tx(f).
/// rx is row-major (antenna, bin); throws numeric_error naming the first
/// zero pilot bin.
std::vector<cd> ls_estimate(std::span<const cd> rx_pilot, std::span<const cd> tx_pilot,
                            std::size_t num_antennas);

/// 10*log10(sum |est - truth|^2 / sum |truth|^2).
double nmse_db(const CsiTensor& estimate, const CsiTensor& truth);

struct EstimateResult {
    CsiTensor estimated;
    double nmse_db = 0.0;
};

/// Full uplink sounding chain on a synthetic channel: synthesize ground
/// truth, apply a frequency-domain Zadoff-Chu pilot, add receiver noise at
/// snr_db (absent: noiseless), then LS-estimate every snapshot. The pilot
/// root must be coprime with the bin count.
EstimateResult estimate_csi(const Scene& scene, const MeasurementConfig& config,
                            double duration_s, std::uint32_t pilot_root,
                            std::optional<double> snr_db, std::uint64_t seed);

}  // namespace a2g
