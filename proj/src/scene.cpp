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

#include "a2g/scene.hpp"

#include <cmath>
#include <sstream>

#include "a2g/keyvalue.hpp"

namespace a2g {

namespace {

cd segment_phasor(double distance_m, double wavelength_m) {
    const double phase = -2.0 * M_PI * distance_m / wavelength_m;
    return cd(std::cos(phase), std::sin(phase));
}

double segment_amplitude(double distance_m, double wavelength_m) {
    return wavelength_m / (4.0 * M_PI * distance_m);
}

PathComponent make_path(const UraGeometry& ura, const Vec3& apparent_source, double path_length_m,
                        cd amplitude, double wavelength_m, PathType type) {
    PathComponent p;
    p.delay_s = path_length_m / kSpeedOfLight;
    p.gain = amplitude * segment_phasor(path_length_m, wavelength_m);
    const auto [az, el] = ura.angles_from_direction(normalized(apparent_source - ura.center));
    p.azimuth_rad = az;
    p.elevation_rad = el;
    p.type = type;
    return p;
}

}  // namespace

void Scene::validate() const {
    if (trajectory.speed_mps <= 0.0) {
        throw config_error("scene: trajectory speed must be positive");
    }
    if (trajectory.length_m() == 0.0) {
        throw config_error("scene: trajectory start and end coincide");
    }
    for (std::size_t i = 0; i < scatterers.size(); ++i) {
        const double mag = scatterers[i].reflection_magnitude;
        if (!(mag >= 0.0 && mag <= 1.0)) {
            throw config_error("scene: scatterer " + std::to_string(i) +
                               " reflection magnitude must be in [0, 1]");
        }
    }
    if (std::abs(ground_reflection) > 1.0) {
        throw config_error("scene: |ground reflection| must be <= 1");
    }
}

Scene Scene::load(const std::filesystem::path& file, const MeasurementConfig& config) {
    const KeyValueFile kv = KeyValueFile::parse(file);
    const auto unknown = kv.unknown_keys({
        "traj_start_m", "traj_end_m", "speed_mps", "ground_height_m", "ground_reflection",
        "scatterer", "boresight", "noise_snr_db", "seed",
    });
    if (!unknown.empty()) {
        throw config_error(file.string() + ": unknown key '" + unknown.front() + "'");
    }

    Scene scene;
    const Vec3 boresight = kv.get_vec3_or("boresight", Vec3{0.0, 1.0, 0.0});
    scene.ura = UraGeometry::vertical_panel(config.array_rows, config.array_cols,
                                            config.element_spacing_m, config.bs_position_m,
                                            boresight);
    scene.trajectory.start_m = kv.get_vec3("traj_start_m");
    scene.trajectory.end_m = kv.get_vec3("traj_end_m");
    scene.trajectory.speed_mps = kv.get_double_or("speed_mps", config.speed_mps);
    scene.ground_height_m = kv.get_double_or("ground_height_m", 0.0);
    if (kv.has("ground_reflection")) {
        std::istringstream in(kv.get_string("ground_reflection"));
        double re = 0.0;
        double im = 0.0;
        if (!(in >> re)) {
            throw config_error(file.string() + ": ground_reflection: expected 're [im]'");
        }
        in >> im;
        scene.ground_reflection = cd(re, im);
    }
    for (const std::string& entry : kv.get_all("scatterer")) {
        std::istringstream in(entry);
        Scatterer s;
        if (!(in >> s.position_m.x >> s.position_m.y >> s.position_m.z >>
              s.reflection_magnitude)) {
            throw config_error(file.string() + ": scatterer: expected 'x y z magnitude', got '" +
                               entry + "'");
        }
        scene.scatterers.push_back(s);
    }
    if (kv.has("noise_snr_db")) {
        scene.noise_snr_db = kv.get_double("noise_snr_db");
    }
    scene.seed = static_cast<std::uint64_t>(kv.get_int_or("seed", 0));
    scene.validate();
    return scene;
}

std::vector<PathComponent> resolve_paths(const Scene& scene, const Vec3& uav_position_m,
                                         double wavelength_m) {
    const UraGeometry& ura = scene.ura;
    if (uav_position_m.z <= scene.ground_height_m) {
        throw config_error("resolve paths: position must be above the ground plane");
    }
    const double los_dist = norm(uav_position_m - ura.center);
    if (los_dist == 0.0) {
        throw numeric_error("resolve paths: position coincides with the array reference");
    }

    std::vector<PathComponent> paths;
    paths.reserve(2 + scene.scatterers.size());

    paths.push_back(make_path(ura, uav_position_m, los_dist,
                              cd(segment_amplitude(los_dist, wavelength_m), 0.0), wavelength_m,
                              PathType::line_of_sight));

    if (scene.ground_reflection != cd{0.0, 0.0}) {
        // Image method: reflect the terminal across the ground plane.
        Vec3 image = uav_position_m;
        image.z = 2.0 * scene.ground_height_m - uav_position_m.z;
        const double d = norm(image - ura.center);
        paths.push_back(make_path(ura, image, d,
                                  scene.ground_reflection * segment_amplitude(d, wavelength_m),
                                  wavelength_m, PathType::ground_bounce));
    }

    for (const Scatterer& s : scene.scatterers) {
        const double d1 = norm(uav_position_m - s.position_m);
        const double d2 = norm(s.position_m - ura.center);
        if (d1 == 0.0 || d2 == 0.0) {
            throw numeric_error("resolve paths: scatterer coincides with terminal or array");
        }
        const double amp = s.reflection_magnitude * segment_amplitude(d1, wavelength_m) *
                           segment_amplitude(d2, wavelength_m);
        paths.push_back(make_path(ura, s.position_m, d1 + d2, cd(amp, 0.0), wavelength_m,
                                  PathType::scatterer));
    }
    return paths;
}

}  // namespace a2g
