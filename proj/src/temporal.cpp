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

#include "a2g/temporal.hpp"

#include <algorithm>
#include <cmath>

namespace a2g {

double HermitianMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const cd& v : values) {
        sum += std::norm(v);
    }
    return std::sqrt(sum);
}

double hermitian_product_trace(const HermitianMatrix& a, const HermitianMatrix& b) {
    // tr(A B) = sum_ij A_ij conj(B_ij) for Hermitian A, B; real up to rounding.
    double tr = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        tr += a.values[i].real() * b.values[i].real() + a.values[i].imag() * b.values[i].imag();
    }
    return tr;
}

AntennaCorr antenna_corr(const CsiTensor& tensor, std::size_t t_index, std::size_t window,
                         std::size_t band_begin, std::size_t band_end) {
    const std::size_t antennas = tensor.num_antennas();
    const std::size_t bins = tensor.num_bins();
    if (band_end == 0) {
        band_end = bins;
    }
    if (band_begin >= band_end || band_end > bins) {
        throw config_error("antenna corr: empty or out-of-range band");
    }
    if (window == 0 || t_index + window > tensor.num_snapshots()) {
        throw config_error("antenna corr: window overruns the record at t=" +
                           std::to_string(t_index));
    }

    AntennaCorr corr;
    corr.matrix = HermitianMatrix(antennas);
    corr.t_index = t_index;
    corr.window = window;
    corr.band_begin = band_begin;
    corr.band_end = band_end;

    HermitianMatrix& r = corr.matrix;
    // Accumulate the lower triangle of the outer products, mirror afterwards.
    std::vector<cd> h(antennas);
    for (std::size_t k = t_index; k < t_index + window; ++k) {
        for (std::size_t f = band_begin; f < band_end; ++f) {
            for (std::size_t m = 0; m < antennas; ++m) {
                h[m] = tensor.at(k, m, f);
            }
            for (std::size_t i = 0; i < antennas; ++i) {
                const cd hi = h[i];
                cd* row = r.values.data() + i * antennas;
                for (std::size_t j = 0; j <= i; ++j) {
                    row[j] += hi * std::conj(h[j]);
                }
            }
        }
    }
    const double scale =
        1.0 / (static_cast<double>(band_end - band_begin) * static_cast<double>(window));
    for (std::size_t i = 0; i < antennas; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            r.at(i, j) *= scale;
            if (i != j) {
                r.at(j, i) = std::conj(r.at(i, j));
            }
        }
    }
    return corr;
}

double corr_matrix_distance(const HermitianMatrix& a, const HermitianMatrix& b) {
    const double na = a.frobenius_norm();
    const double nb = b.frobenius_norm();
    if (na == 0.0 || nb == 0.0) {
        throw numeric_error("cmd: zero-norm correlation matrix");
    }
    const double d = 1.0 - hermitian_product_trace(a, b) / (na * nb);
    return std::clamp(d, 0.0, 1.0);
}

namespace {

std::vector<std::size_t> distance_grid(std::size_t usable, std::size_t stride) {
    std::vector<std::size_t> refs;
    for (std::size_t i = 0; i < usable; i += std::max<std::size_t>(stride, 1)) {
        refs.push_back(i);
    }
    return refs;
}

std::vector<std::size_t> angle_grid(std::span<const double> snapshot_angles,
                                    const CmdMapParams& params, std::vector<double>& grid_out) {
    if (!(params.angle_step_deg > 0.0) || !(params.angle_max_deg > params.angle_min_deg)) {
        throw config_error("cmd map: bad angle grid parameters");
    }
    const auto [lo_it, hi_it] =
        std::minmax_element(snapshot_angles.begin(), snapshot_angles.end());
    const double tol = params.angle_step_deg;
    if (params.angle_min_deg < *lo_it - tol || params.angle_max_deg > *hi_it + tol) {
        throw config_error("cmd map: angle span [" + std::to_string(params.angle_min_deg) + ", " +
                           std::to_string(params.angle_max_deg) +
                           "] outside trajectory coverage [" + std::to_string(*lo_it) + ", " +
                           std::to_string(*hi_it) + "]");
    }

    // Nearest snapshot per grid angle via a sort over (angle, index).
    std::vector<std::size_t> order(snapshot_angles.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return snapshot_angles[a] < snapshot_angles[b];
    });

    std::vector<std::size_t> refs;
    const auto steps = static_cast<std::size_t>(
        std::floor((params.angle_max_deg - params.angle_min_deg) / params.angle_step_deg + 1e-9));
    for (std::size_t s = 0; s <= steps; ++s) {
        const double target = params.angle_min_deg + static_cast<double>(s) * params.angle_step_deg;
        auto it = std::lower_bound(order.begin(), order.end(), target,
                                   [&](std::size_t idx, double val) {
                                       return snapshot_angles[idx] < val;
                                   });
        std::size_t best;
        if (it == order.begin()) {
            best = *it;
        } else if (it == order.end()) {
            best = *(it - 1);
        } else {
            const std::size_t above = *it;
            const std::size_t below = *(it - 1);
            best = (std::abs(snapshot_angles[above] - target) <
                    std::abs(snapshot_angles[below] - target))
                       ? above
                       : below;
        }
        grid_out.push_back(target);
        refs.push_back(best);
    }
    return refs;
}

}  // namespace

CmdMap cmd_map(const CsiTensor& tensor, std::span<const Vec3> positions, CmdAxis axis,
               const CmdMapParams& params, const TrajectoryFrame& frame) {
    const std::size_t snapshots = tensor.num_snapshots();
    if (positions.size() != snapshots) {
        throw data_error("cmd map: need one position per snapshot");
    }
    if (params.window == 0 || params.window > snapshots) {
        throw config_error("cmd map: window must be in [1, T]");
    }
    const std::size_t usable = snapshots - params.window + 1;

    CmdMap map;
    map.axis = axis;

    std::vector<std::size_t> refs;
    if (axis == CmdAxis::distance) {
        refs = distance_grid(usable, params.stride);
        // Axis value: arc length traveled up to the snapshot.
        std::vector<double> arc(snapshots, 0.0);
        for (std::size_t t = 1; t < snapshots; ++t) {
            arc[t] = arc[t - 1] + norm(positions[t] - positions[t - 1]);
        }
        for (std::size_t idx : refs) {
            map.axis_values.push_back(arc[idx]);
        }
    } else {
        std::vector<double> angles(usable);
        for (std::size_t t = 0; t < usable; ++t) {
            angles[t] = angle_to_bs_deg(positions[t], frame.bs_position, frame.travel_direction);
        }
        refs = angle_grid(angles, params, map.axis_values);
    }

    map.snapshot_index = refs;
    for (std::size_t idx : refs) {
        map.times_s.push_back(tensor.timestamps_s[idx]);
    }

    // Correlation matrices per reference, then the pairwise map. Both loops
    // write disjoint outputs, so the result is thread-count independent.
    const std::size_t n = refs.size();
    std::vector<HermitianMatrix> corr(n);
    std::vector<double> norms(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        corr[idx] = antenna_corr(tensor, refs[idx], params.window, params.band_begin,
                                 params.band_end)
                        .matrix;
        norms[idx] = corr[idx].frobenius_norm();
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (norms[i] == 0.0) {
            throw numeric_error("cmd map: zero-norm correlation matrix at grid position " +
                                std::to_string(i));
        }
    }

    map.values.assign(n * n, 0.0);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const auto row = static_cast<std::size_t>(i);
        for (std::size_t col = row + 1; col < n; ++col) {
            const double d =
                1.0 - hermitian_product_trace(corr[row], corr[col]) / (norms[row] * norms[col]);
            map.values[row * n + col] = std::clamp(d, 0.0, 1.0);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            map.values[j * n + i] = map.values[i * n + j];
        }
    }
    return map;
}

std::vector<StationaryRegionEntry> stationary_region(const CmdMap& map, double c_th,
                                                     double speed_mps) {
    if (!(c_th > 0.0 && c_th < 1.0)) {
        throw config_error("stationary region: threshold must be in (0, 1)");
    }
    const std::size_t n = map.size();
    if (n == 0) {
        return {};
    }
    std::vector<StationaryRegionEntry> out(n);
    const double total_time = map.times_s.back() - map.times_s.front();
    const double total_angle = std::abs(map.axis_values.back() - map.axis_values.front());

#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        std::size_t lo = i;
        while (lo > 0 && map.at(i, lo - 1) < c_th) {
            --lo;
        }
        std::size_t hi = i;
        while (hi + 1 < n && map.at(i, hi + 1) < c_th) {
            ++hi;
        }
        StationaryRegionEntry e;
        e.index = i;
        e.t_ref = map.times_s[i];
        e.t_min = map.times_s[lo];
        e.t_max = map.times_s[hi];
        if (map.axis == CmdAxis::distance) {
            e.extent = speed_mps * (e.t_max - e.t_min);
            const double total = speed_mps * total_time;
            e.normalized = total > 0.0 ? e.extent / total : 0.0;
        } else {
            e.extent = std::abs(map.axis_values[hi] - map.axis_values[lo]);
            e.normalized = total_angle > 0.0 ? e.extent / total_angle : 0.0;
        }
        out[i] = e;
    }
    return out;
}

}  // namespace a2g
