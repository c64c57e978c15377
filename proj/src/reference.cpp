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

#include "a2g/reference.hpp"

#include <cmath>

namespace a2g::ref {

std::vector<cd> impulse_response(const CsiTensor& tensor) {
    const std::size_t bins = tensor.num_bins();
    const std::size_t rows = tensor.num_snapshots() * tensor.num_antennas();
    std::vector<cd> impulse(rows * bins);
    const double scale = 1.0 / std::sqrt(static_cast<double>(bins));
    for (std::size_t r = 0; r < rows; ++r) {
        const cd* in = tensor.data.data() + r * bins;
        cd* out = impulse.data() + r * bins;
        for (std::size_t n = 0; n < bins; ++n) {
            cd acc{};
            for (std::size_t f = 0; f < bins; ++f) {
                const double phase = 2.0 * M_PI * static_cast<double>(f) *
                                     static_cast<double>(n) / static_cast<double>(bins);
                acc += in[f] * cd(std::cos(phase), std::sin(phase));
            }
            out[n] = acc * scale;
        }
    }
    return impulse;
}

PdpSeries averaged_pdp(const CsiTensor& tensor, std::size_t window) {
    const std::size_t snapshots = tensor.num_snapshots();
    const std::size_t antennas = tensor.num_antennas();
    const std::size_t bins = tensor.num_bins();
    if (window == 0 || window > snapshots) {
        throw config_error("averaged pdp: window must be in [1, T]");
    }
    const std::vector<cd> impulse = ref::impulse_response(tensor);

    PdpSeries series;
    series.window = window;
    series.num_delay_bins = bins;
    series.delay_step_s = tensor.config.delay_step_s();
    const std::size_t rows = snapshots - window + 1;
    series.times_s.assign(tensor.timestamps_s.begin(),
                          tensor.timestamps_s.begin() + static_cast<long>(rows));
    series.averaged.assign(rows * bins, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t f = 0; f < bins; ++f) {
            double acc = 0.0;
            for (std::size_t k = i; k < i + window; ++k) {
                for (std::size_t m = 0; m < antennas; ++m) {
                    acc += std::norm(impulse[(k * antennas + m) * bins + f]);
                }
            }
            series.averaged[i * bins + f] =
                acc / (static_cast<double>(antennas) * static_cast<double>(window));
        }
    }
    return series;
}

HermitianMatrix antenna_corr(const CsiTensor& tensor, std::size_t t_index, std::size_t window,
                             std::size_t band_begin, std::size_t band_end) {
    const std::size_t antennas = tensor.num_antennas();
    if (band_end == 0) {
        band_end = tensor.num_bins();
    }
    if (band_begin >= band_end || band_end > tensor.num_bins()) {
        throw config_error("antenna corr: empty or out-of-range band");
    }
    if (window == 0 || t_index + window > tensor.num_snapshots()) {
        throw config_error("antenna corr: window overruns the record at t=" +
                           std::to_string(t_index));
    }
    HermitianMatrix r(antennas);
    for (std::size_t i = 0; i < antennas; ++i) {
        for (std::size_t j = 0; j < antennas; ++j) {
            cd acc{};
            for (std::size_t k = t_index; k < t_index + window; ++k) {
                for (std::size_t f = band_begin; f < band_end; ++f) {
                    acc += tensor.at(k, i, f) * std::conj(tensor.at(k, j, f));
                }
            }
            r.at(i, j) = acc / (static_cast<double>(window) *
                                static_cast<double>(band_end - band_begin));
        }
    }
    return r;
}

FreqCorr freq_corr(const CsiTensor& tensor, std::size_t t_index, std::size_t window) {
    const std::size_t bins = tensor.num_bins();
    const std::size_t antennas = tensor.num_antennas();
    if (window == 0 || t_index + window > tensor.num_snapshots()) {
        throw config_error("freq corr: window overruns the record at t=" +
                           std::to_string(t_index));
    }
    FreqCorr corr;
    corr.num_bins = bins;
    corr.lag_step_hz = tensor.config.bandwidth_hz / static_cast<double>(bins);
    corr.values.assign(2 * bins - 1, cd{});
    for (long lag = -(static_cast<long>(bins) - 1); lag < static_cast<long>(bins); ++lag) {
        cd acc{};
        std::size_t count = 0;
        for (std::size_t k = t_index; k < t_index + window; ++k) {
            for (std::size_t m = 0; m < antennas; ++m) {
                for (std::size_t f = 0; f < bins; ++f) {
                    const long g = static_cast<long>(f) + lag;
                    if (g < 0 || g >= static_cast<long>(bins)) {
                        continue;
                    }
                    acc += tensor.at(k, m, f) * std::conj(tensor.at(k, m, static_cast<std::size_t>(g)));
                    ++count;
                }
            }
        }
        corr.values[static_cast<std::size_t>(lag + static_cast<long>(bins) - 1)] =
            acc / static_cast<double>(count);
    }
    return corr;
}

CmdMap cmd_map(const CsiTensor& tensor, std::span<const Vec3> positions, CmdAxis axis,
               const CmdMapParams& params, const TrajectoryFrame& frame) {
    // Same grid selection as the production kernel, serial correlation and
    // pairwise loops built on the reference antenna_corr.
    CmdMap map = a2g::cmd_map(tensor, positions, axis, params, frame);
    const std::size_t n = map.size();
    std::vector<HermitianMatrix> corr;
    corr.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        corr.push_back(ref::antenna_corr(tensor, map.snapshot_index[i], params.window,
                                         params.band_begin, params.band_end));
    }
    for (std::size_t i = 0; i < n; ++i) {
        map.values[i * n + i] = 0.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = corr_matrix_distance(corr[i], corr[j]);
            map.values[i * n + j] = d;
            map.values[j * n + i] = d;
        }
    }
    return map;
}

}  // namespace a2g::ref
