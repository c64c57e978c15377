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

#include "a2g/synth.hpp"

#include <cmath>

#include "a2g/rng.hpp"

namespace a2g {

namespace {

void synth_snapshot(const Scene& scene, const MeasurementConfig& config, double t_s,
                    std::span<cd> out) {
    const std::size_t num_antennas = config.num_antennas();
    const std::size_t num_bins = config.num_freq_bins;
    const double wavelength = config.wavelength_m();

    const Vec3 pos = scene.trajectory.position_at(t_s);
    const auto paths = resolve_paths(scene, pos, wavelength);

    std::vector<cd> tap(num_bins);
    for (const PathComponent& path : paths) {
        const auto steer =
            steering_phase(scene.ura, path.azimuth_rad, path.elevation_rad, wavelength);
        for (std::size_t f = 0; f < num_bins; ++f) {
            const double phase = -2.0 * M_PI * config.freq_offset_hz(f) * path.delay_s;
            tap[f] = cd(std::cos(phase), std::sin(phase));
        }
        for (std::size_t m = 0; m < num_antennas; ++m) {
            const cd g = path.gain * steer[m];
            cd* row = out.data() + m * num_bins;
            for (std::size_t f = 0; f < num_bins; ++f) {
                row[f] += g * tap[f];
            }
        }
    }
}

}  // namespace

CsiTensor synth_csi(const Scene& scene, const MeasurementConfig& config, double duration_s) {
    config.validate();
    scene.validate();
    if (duration_s <= 0.0) {
        throw config_error("synth: duration must be positive");
    }
    const double max_duration = scene.trajectory.duration_s();
    if (duration_s > max_duration * (1.0 + 1e-12)) {
        throw config_error("synth: duration " + std::to_string(duration_s) +
                           " s exceeds trajectory coverage of " + std::to_string(max_duration) +
                           " s");
    }

    const auto snapshots =
        static_cast<std::size_t>(std::llround(duration_s / config.csi_interval_s));
    if (snapshots == 0) {
        throw config_error("synth: duration shorter than one csi interval");
    }

    CsiTensor tensor = make_tensor(config, snapshots);
    const std::size_t stride = config.num_antennas() * config.num_freq_bins;

#pragma omp parallel for schedule(static)
    for (long long t = 0; t < static_cast<long long>(snapshots); ++t) {
        synth_snapshot(scene, config, tensor.timestamps_s[static_cast<std::size_t>(t)],
                       {tensor.data.data() + static_cast<std::size_t>(t) * stride, stride});
    }

    if (scene.noise_snr_db) {
        // Noise power is set against the mean clean sample power; the mean is
        // accumulated serially so the scale does not depend on thread count.
        double power = 0.0;
        for (const cd& v : tensor.data) {
            power += std::norm(v);
        }
        power /= static_cast<double>(tensor.data.size());
        if (power > 0.0) {
            const double noise_power = power * std::pow(10.0, -*scene.noise_snr_db / 10.0);
            const double scale = std::sqrt(noise_power);
#pragma omp parallel for schedule(static)
            for (long long t = 0; t < static_cast<long long>(snapshots); ++t) {
                Rng rng = Rng::substream(scene.seed, static_cast<std::uint64_t>(t));
                cd* snap = tensor.data.data() + static_cast<std::size_t>(t) * stride;
                for (std::size_t i = 0; i < stride; ++i) {
                    snap[i] += scale * rng.next_complex_gaussian();
                }
            }
        }
    }
    return tensor;
}

TrajectoryLog synth_trajectory_log(const Scene& scene, const MeasurementConfig& config,
                                   double duration_s) {
    TrajectoryLog log;
    const auto fixes =
        static_cast<std::size_t>(std::floor(duration_s / config.gps_interval_s)) + 1;
    log.samples.reserve(fixes);
    for (std::size_t i = 0; i < fixes; ++i) {
        const double t = static_cast<double>(i) * config.gps_interval_s;
        log.samples.push_back({t, scene.trajectory.position_at(t)});
    }
    return log;
}

std::vector<Vec3> synth_positions(const Scene& scene, const CsiTensor& tensor) {
    std::vector<Vec3> positions(tensor.num_snapshots());
    for (std::size_t t = 0; t < positions.size(); ++t) {
        positions[t] = scene.trajectory.position_at(tensor.timestamps_s[t]);
    }
    return positions;
}

}  // namespace a2g
