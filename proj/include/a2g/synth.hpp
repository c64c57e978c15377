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

#include <vector>

#include "a2g/scene.hpp"
#include "a2g/tensor.hpp"
#include "a2g/trajectory.hpp"

namespace a2g {

/// Synthesize H(t, m, f) = sum over paths of gain * steering * exp(-j*2*pi*
/// f_off(f) * delay), one snapshot per csi_interval along the trajectory.
/// Far-field model: per-element phase only, no per-element delay (the array
/// aperture is far below the delay resolution). Optional complex white
/// Gaussian noise per (t, m, f) at scene.noise_snr_db relative to the mean
/// clean sample power, seeded per snapshot, so results are bit-identical for
/// equal scene + seed regardless of thread count.
CsiTensor synth_csi(const Scene& scene, const MeasurementConfig& config, double duration_s);

/// Ideal position fixes every config.gps_interval_s along the scene trajectory.
TrajectoryLog synth_trajectory_log(const Scene& scene, const MeasurementConfig& config,
                                   double duration_s);

/// Per-snapshot ground-truth positions (trajectory evaluated at the CSI
/// timestamps).
std::vector<Vec3> synth_positions(const Scene& scene, const CsiTensor& tensor);

}  // namespace a2g
