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

#include "a2g/tensor.hpp"

#include <cmath>
#include <string>

namespace a2g {

void CsiTensor::validate() const {
    config.validate();
    const std::size_t expected = num_snapshots() * num_antennas() * num_bins();
    if (data.size() != expected) {
        throw data_error("tensor: data has " + std::to_string(data.size()) +
                         " values, dimensions require " + std::to_string(expected));
    }
    for (std::size_t t = 1; t < timestamps_s.size(); ++t) {
        if (!(timestamps_s[t] > timestamps_s[t - 1])) {
            throw data_error("tensor: timestamps not strictly increasing at snapshot " +
                             std::to_string(t));
        }
    }
    for (double ts : timestamps_s) {
        if (!std::isfinite(ts)) {
            throw data_error("tensor: non-finite timestamp");
        }
    }
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (!std::isfinite(data[i].real()) || !std::isfinite(data[i].imag())) {
            throw data_error("tensor: non-finite value at flat index " + std::to_string(i));
        }
    }
}

CsiTensor make_tensor(const MeasurementConfig& config, std::size_t num_snapshots) {
    config.validate();
    CsiTensor tensor;
    tensor.config = config;
    tensor.timestamps_s.resize(num_snapshots);
    for (std::size_t t = 0; t < num_snapshots; ++t) {
        tensor.timestamps_s[t] = static_cast<double>(t) * config.csi_interval_s;
    }
    tensor.data.assign(num_snapshots * config.num_antennas() * config.num_freq_bins, cd{});
    return tensor;
}

}  // namespace a2g
