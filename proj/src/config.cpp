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

#include "a2g/config.hpp"

#include <fstream>

#include "a2g/keyvalue.hpp"

namespace a2g {

void MeasurementConfig::validate() const {
    if (bandwidth_hz <= 0.0) {
        throw config_error("config: bandwidth must be positive");
    }
    if (center_frequency_hz <= 0.0) {
        throw config_error("config: center frequency must be positive");
    }
    if (csi_interval_s <= 0.0) {
        throw config_error("config: csi interval must be positive");
    }
    if (gps_interval_s <= 0.0) {
        throw config_error("config: gps interval must be positive");
    }
    if (num_freq_bins < 2) {
        throw config_error("config: need at least 2 frequency bins");
    }
    if (array_rows == 0 || array_cols == 0) {
        throw config_error("config: array dimensions must be nonzero");
    }
    if (element_spacing_m <= 0.0) {
        throw config_error("config: element spacing must be positive");
    }
    if (speed_mps <= 0.0) {
        throw config_error("config: speed must be positive");
    }
}

MeasurementConfig MeasurementConfig::load(const std::filesystem::path& file) {
    const KeyValueFile kv = KeyValueFile::parse(file);
    const auto unknown = kv.unknown_keys({
        "center_frequency_hz", "bandwidth_hz", "csi_interval_s", "gps_interval_s", "speed_mps",
        "array_rows", "array_cols", "element_spacing_m", "bs_position_m", "bs_height_m",
        "num_freq_bins",
    });
    if (!unknown.empty()) {
        throw config_error(file.string() + ": unknown key '" + unknown.front() + "'");
    }

    MeasurementConfig c;
    c.center_frequency_hz = kv.get_double_or("center_frequency_hz", c.center_frequency_hz);
    c.bandwidth_hz = kv.get_double_or("bandwidth_hz", c.bandwidth_hz);
    c.csi_interval_s = kv.get_double_or("csi_interval_s", c.csi_interval_s);
    c.gps_interval_s = kv.get_double_or("gps_interval_s", c.gps_interval_s);
    c.speed_mps = kv.get_double_or("speed_mps", c.speed_mps);
    c.array_rows = static_cast<std::size_t>(kv.get_int_or("array_rows", static_cast<std::int64_t>(c.array_rows)));
    c.array_cols = static_cast<std::size_t>(kv.get_int_or("array_cols", static_cast<std::int64_t>(c.array_cols)));
    c.element_spacing_m = kv.get_double_or("element_spacing_m", c.element_spacing_m);
    c.bs_position_m = kv.get_vec3_or("bs_position_m", c.bs_position_m);
    c.bs_height_m = kv.get_double_or("bs_height_m", c.bs_position_m.z);
    c.num_freq_bins = static_cast<std::size_t>(kv.get_int_or("num_freq_bins", static_cast<std::int64_t>(c.num_freq_bins)));
    c.validate();
    return c;
}

void MeasurementConfig::save(const std::filesystem::path& file) const {
    std::ofstream out(file);
    if (!out) {
        throw data_error("cannot write config file: " + file.string());
    }
    out.precision(17);
    out << "center_frequency_hz = " << center_frequency_hz << "\n"
        << "bandwidth_hz = " << bandwidth_hz << "\n"
        << "csi_interval_s = " << csi_interval_s << "\n"
        << "gps_interval_s = " << gps_interval_s << "\n"
        << "speed_mps = " << speed_mps << "\n"
        << "array_rows = " << array_rows << "\n"
        << "array_cols = " << array_cols << "\n"
        << "element_spacing_m = " << element_spacing_m << "\n"
        << "bs_position_m = " << bs_position_m.x << " " << bs_position_m.y << " "
        << bs_position_m.z << "\n"
        << "bs_height_m = " << bs_height_m << "\n"
        << "num_freq_bins = " << num_freq_bins << "\n";
}

}  // namespace a2g
