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

#include "a2g/config.hpp"
#include "a2g/types.hpp"

namespace a2g {

/// Complex channel frequency response H(t, m, f) over snapshot x antenna x
/// frequency bin, stored row-major in that order. Treated as immutable after
/// construction; concurrent reads are safe.
struct CsiTensor {
    MeasurementConfig config;
    std::vector<double> timestamps_s;  // one per snapshot, strictly increasing
    std::vector<cd> data;              // size T * M * F

    std::size_t num_snapshots() const { return timestamps_s.size(); }
    std::size_t num_antennas() const { return config.num_antennas(); }
    std::size_t num_bins() const { return config.num_freq_bins; }

    std::size_t index(std::size_t t, std::size_t m, std::size_t f) const {
        return (t * num_antennas() + m) * num_bins() + f;
    }

    cd at(std::size_t t, std::size_t m, std::size_t f) const { return data[index(t, m, f)]; }
    cd& at(std::size_t t, std::size_t m, std::size_t f) { return data[index(t, m, f)]; }

    /// All bins of one (snapshot, antenna) pair.
    std::span<const cd> row(std::size_t t, std::size_t m) const {
        return {data.data() + index(t, m, 0), num_bins()};
    }
    std::span<cd> row(std::size_t t, std::size_t m) {
        return {data.data() + index(t, m, 0), num_bins()};
    }

    /// All antennas and bins of one snapshot.
    std::span<const cd> snapshot(std::size_t t) const {
        return {data.data() + index(t, 0, 0), num_antennas() * num_bins()};
    }
    std::span<cd> snapshot(std::size_t t) {
        return {data.data() + index(t, 0, 0), num_antennas() * num_bins()};
    }

    /// Throws data_error on dimension mismatch, non-increasing timestamps,
    /// or non-finite values.
    void validate() const;
};

/// Zero-filled tensor with timestamps k * csi_interval.
CsiTensor make_tensor(const MeasurementConfig& config, std::size_t num_snapshots);

}  // namespace a2g
