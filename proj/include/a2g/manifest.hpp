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

#include <filesystem>
#include <string>

#include "a2g/geometry.hpp"
#include "a2g/temporal.hpp"

namespace a2g {

/// Every analysis knob in one place. Serialized next to the outputs so a run
/// is reproducible from its manifest alone.
struct AnalysisParams {
    std::size_t window = 20;
    double c_th = 0.2;
    std::size_t band_begin = 0;
    std::size_t band_end = 0;        // 0: all bins
    std::size_t stride = 20;
    double angle_min_deg = 40.0;
    double angle_max_deg = 140.0;
    double angle_step_deg = 0.1;
    double clip_db = 30.0;
    std::size_t pdp_pad = 1;  // display-only delay oversampling for the PDP export
    double rho_threshold_hi = 0.85;
    double rho_threshold_lo = 0.80;
    std::size_t spatial_ref_row = 3;
    std::size_t spatial_ref_col = 3;
    double spatial_angle_deg = 90.0;
    ElementOrder element_order = ElementOrder::column_stacked;
    std::string label = "trajectory";

    void validate() const;
    CmdMapParams map_params() const;
};

struct RunManifest {
    std::string csi_path;
    std::string trajectory_path;
    std::string out_dir;
    AnalysisParams params;

    static RunManifest load(const std::filesystem::path& file);
    void save(const std::filesystem::path& file) const;
};

}  // namespace a2g
