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
#include <optional>
#include <vector>

#include "a2g/config.hpp"
#include "a2g/geometry.hpp"
#include "a2g/types.hpp"

namespace a2g {

enum class PathType { line_of_sight, ground_bounce, scatterer };

/// One multipath component as seen at the array reference point.
struct PathComponent {
    double delay_s = 0.0;
    cd gain;
    double azimuth_rad = 0.0;
    double elevation_rad = 0.0;
    PathType type = PathType::line_of_sight;
};

struct Scatterer {
    Vec3 position_m;
    double reflection_magnitude = 0.0;  // in [0, 1]
};

/// Straight constant-speed pass.
struct LinearTrajectory {
    Vec3 start_m;
    Vec3 end_m;
    double speed_mps = 1.5;

    double length_m() const { return norm(end_m - start_m); }
    double duration_s() const { return length_m() / speed_mps; }
    Vec3 direction() const { return normalized(end_m - start_m); }
    Vec3 position_at(double t_s) const { return start_m + direction() * (speed_mps * t_s); }
};

/// Deterministic single-bounce propagation scene: an array, a moving
/// terminal, a flat ground plane, and point scatterers.
struct Scene {
    UraGeometry ura;
    LinearTrajectory trajectory;
    std::vector<Scatterer> scatterers;
    double ground_height_m = 0.0;
    cd ground_reflection{0.0, 0.0};
    std::optional<double> noise_snr_db;  // absent: noise off
    std::uint64_t seed = 0;

    void validate() const;

    /// Environment and trajectory come from the file; array geometry and RF
    /// parameters come from the measurement config (the file may override
    /// the boresight, which defaults to +y).
    static Scene load(const std::filesystem::path& file, const MeasurementConfig& config);
};

/// LOS + image-method ground bounce + one single-bounce path per scatterer.
/// Segment amplitudes follow lambda/(4*pi*d); the ground path is scaled by
/// the ground reflection coefficient, scatterer paths by the product of both
/// segment losses and the reflection magnitude. Throws numeric_error when the
/// position coincides with the array reference, config_error when it is not
/// above the ground plane.
std::vector<PathComponent> resolve_paths(const Scene& scene, const Vec3& uav_position_m,
                                         double wavelength_m);

}  // namespace a2g
