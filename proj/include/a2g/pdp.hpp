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

#include <span>
#include <vector>

#include "a2g/tensor.hpp"

namespace a2g {

/// Power delay profiles averaged over a sliding window of W snapshots and all
/// antennas: P_h(t_i, tau) = (1/(M*W)) * sum over the window and antennas of
/// the per-tap powers. Rows cover t_i in [0, T - W].
struct PdpSeries {
    std::size_t window = 1;
    std::size_t num_delay_bins = 0;
    double delay_step_s = 0.0;        // 1 / bandwidth
    std::size_t reference_bin = 0;    // circular delay shift already applied
    std::vector<double> times_s;      // reference timestamp per row
    std::vector<double> averaged;     // rows x num_delay_bins

    std::size_t rows() const { return times_s.size(); }

    std::span<const double> profile(std::size_t i) const {
        return {averaged.data() + i * num_delay_bins, num_delay_bins};
    }
    std::span<double> profile(std::size_t i) {
        return {averaged.data() + i * num_delay_bins, num_delay_bins};
    }
};

/// Unitary inverse DFT over the frequency axis of one (t, m) row:
/// h[n] = (1/sqrt(F)) * sum_f H[f] * exp(+j*2*pi*f*n/F). Parseval holds.
void impulse_response_row(std::span<const cd> freq_row, std::span<cd> delay_row);

/// Full impulse response h(t, m, tau), same layout as the tensor. Intended
/// for small tensors; the averaged-PDP path below streams per snapshot.
std::vector<cd> impulse_response(const CsiTensor& tensor);

/// Elementwise squared magnitude.
std::vector<double> instantaneous_pdp(std::span<const cd> impulse);

/// Window + antenna average of per-snapshot tap powers, computed directly
/// from instantaneous PDPs laid out as (t, m, tau).
PdpSeries averaged_pdp_from_power(std::span<const double> power, std::size_t snapshots,
                                  std::size_t antennas, std::size_t bins, std::size_t window,
                                  std::span<const double> timestamps, double delay_step_s);

/// Fused transform + average; parallel over snapshots, never materializes the
/// full impulse response. Throws config_error when window > T.
/// pad_factor > 1 zero-pads the frequency rows before the transform, giving
/// pad_factor * F delay bins of width 1/(pad_factor * bandwidth) - a display
/// refinement only, the resolution stays 1/bandwidth.
PdpSeries averaged_pdp(const CsiTensor& tensor, std::size_t window, std::size_t pad_factor = 1);

/// Circularly shift all profiles so the globally strongest tap lands on bin 0
/// ("relative delay" reference). Returns the shift applied.
std::size_t rereference_delays(PdpSeries& series);

/// Zero taps below (per-profile peak) - clip_db, for noise-robust moments.
void clip_noise_floor(PdpSeries& series, double clip_db);

enum class PowerMode { total, los_tap };

/// Per-row received power: sum over taps, or the tap at relative delay 0.
std::vector<double> received_power(const PdpSeries& series, PowerMode mode);

/// 10*log10(x / max(x)); throws numeric_error when all values are zero.
std::vector<double> to_db_normalized(std::span<const double> values);

}  // namespace a2g
