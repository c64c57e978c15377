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
#include <vector>

#include "a2g/tensor.hpp"
#include "a2g/types.hpp"

namespace a2g {

/// Position fixes logged alongside a sounding run, typically at a coarser
/// interval than the CSI snapshots.
struct TrajectoryLog {
    struct Sample {
        double t_s = 0.0;
        Vec3 position_m;
    };

    std::vector<Sample> samples;

    /// Linear interpolation in time, clamped to the first/last sample.
    Vec3 position_at(double t_s) const;

    void validate() const;

    /// CSV with header `timestamp_s,x_m,y_m,z_m`.
    static TrajectoryLog load_csv(const std::filesystem::path& file);
    void save_csv(const std::filesystem::path& file) const;
};

/// One position per tensor snapshot. Snapshots outside the log's time span
/// are clamped to the nearest end; a warning with the clamped count goes to
/// stderr. Throws data_error on an empty log.
std::vector<Vec3> align_trajectory(const TrajectoryLog& log, const CsiTensor& tensor);

}  // namespace a2g
