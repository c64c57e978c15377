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

#include <cstddef>
#include <filesystem>

#include "a2g/types.hpp"

namespace a2g {

/// Sounding-run parameters. Defaults follow the reference 64-element setup:
/// 2.61 GHz carrier, 18 MHz usable bandwidth, 8x8 patch array inside a 56 cm
/// square (0.08 m element pitch), CSI every 1 ms, GPS fixes every 10 ms,
/// platform speed 1.5 m/s.
struct MeasurementConfig {
    double center_frequency_hz = 2.61e9;
    double bandwidth_hz = 18e6;
    double csi_interval_s = 1e-3;
    double gps_interval_s = 10e-3;
    double speed_mps = 1.5;
    std::size_t array_rows = 8;
    std::size_t array_cols = 8;
    double element_spacing_m = 0.08;
    Vec3 bs_position_m{0.0, 0.0, 11.0};
    double bs_height_m = 11.0;
    std::size_t num_freq_bins = 100;

    std::size_t num_antennas() const { return array_rows * array_cols; }

    double wavelength_m() const { return kSpeedOfLight / center_frequency_hz; }

    /// Baseband frequency of bin f; bins span the bandwidth centered on 0,
    /// f_off(f) = (f - F/2) * B/F.
    double freq_offset_hz(std::size_t bin) const {
        const double step = bandwidth_hz / static_cast<double>(num_freq_bins);
        return (static_cast<double>(bin) - static_cast<double>(num_freq_bins) / 2.0) * step;
    }

    /// Delay-domain bin width, 1/bandwidth.
    double delay_step_s() const { return 1.0 / bandwidth_hz; }

    /// Throws config_error when invariants are violated (M = rows*cols is by
    /// construction; bandwidth > 0, csi_interval > 0, F >= 2, spacing > 0).
    void validate() const;

    static MeasurementConfig load(const std::filesystem::path& file);
    void save(const std::filesystem::path& file) const;
};

}  // namespace a2g
