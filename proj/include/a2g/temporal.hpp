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
#include <span>
#include <vector>

#include "a2g/geometry.hpp"
#include "a2g/tensor.hpp"

namespace a2g {

struct HermitianMatrix {
    std::size_t n = 0;
    std::vector<cd> values;  // row-major n x n

    explicit HermitianMatrix(std::size_t size = 0) : n(size), values(size * size) {}

    cd at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
    cd& at(std::size_t i, std::size_t j) { return values[i * n + j]; }

    double frobenius_norm() const;
};

/// Real part of the Frobenius inner product tr(A * B) for Hermitian A, B.
double hermitian_product_trace(const HermitianMatrix& a, const HermitianMatrix& b);

/// Averaged receive antenna correlation matrix
///   R_a(t_i) = (1/(B*W)) sum over band bins and the W-snapshot window of
///   H(t_k, :, f) H(t_k, :, f)^H.
/// band is [band_begin, band_end). Hermitian PSD by construction.
struct AntennaCorr {
    HermitianMatrix matrix;
    std::size_t t_index = 0;
    std::size_t window = 1;
    std::size_t band_begin = 0;
    std::size_t band_end = 0;
};

AntennaCorr antenna_corr(const CsiTensor& tensor, std::size_t t_index, std::size_t window,
                         std::size_t band_begin, std::size_t band_end);

/// Correlation matrix distance
///   d_corr = 1 - tr(R_i R_j) / (||R_i||_F ||R_j||_F),
/// clamped to [0, 1]. Throws numeric_error on a zero-norm argument.
double corr_matrix_distance(const HermitianMatrix& a, const HermitianMatrix& b);

enum class CmdAxis { distance, angle };

struct CmdMapParams {
    std::size_t window = 20;
    std::size_t band_begin = 0;
    std::size_t band_end = 0;       // 0: all bins
    std::size_t stride = 20;        // distance axis: reference every `stride` snapshots
    double angle_min_deg = 40.0;    // angle axis: uniform grid over this span
    double angle_max_deg = 140.0;
    double angle_step_deg = 0.1;
};

/// Frame needed to turn snapshot positions into axis values.
struct TrajectoryFrame {
    Vec3 bs_position;
    Vec3 travel_direction;
};

/// Pairwise CMD over reference positions along the trajectory. distance mode
/// places references every `stride` snapshots with the axis in meters
/// traveled; angle mode resamples onto the uniform angle grid by
/// nearest-snapshot selection (no CSI interpolation). Symmetric, zero
/// diagonal, values in [0, 1].
struct CmdMap {
    CmdAxis axis = CmdAxis::distance;
    std::vector<double> axis_values;          // meters or degrees
    std::vector<double> times_s;              // snapshot timestamp per grid point
    std::vector<std::size_t> snapshot_index;  // chosen reference snapshot
    std::vector<double> values;               // n x n

    std::size_t size() const { return axis_values.size(); }
    double at(std::size_t i, std::size_t j) const { return values[i * size() + j]; }
};

CmdMap cmd_map(const CsiTensor& tensor, std::span<const Vec3> positions, CmdAxis axis,
               const CmdMapParams& params, const TrajectoryFrame& frame);

/// Quasi-stationary region around each reference position: scan outward until
/// the CMD first reaches c_th (exclusive), clamped at the map edges. extent is
/// speed * (t_max - t_min) on the distance axis and the angle span on the
/// angle axis; normalized divides by the map's total span.
struct StationaryRegionEntry {
    std::size_t index = 0;     // grid position
    double t_ref = 0.0;
    double t_min = 0.0;
    double t_max = 0.0;
    double extent = 0.0;       // meters (distance axis) or degrees (angle axis)
    double normalized = 0.0;   // extent / total span, in [0, 1]
};

std::vector<StationaryRegionEntry> stationary_region(const CmdMap& map, double c_th,
                                                     double speed_mps);

}  // namespace a2g
