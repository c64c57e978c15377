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

// Times the OpenMP kernels against the serial reference implementations on a
// synthetic workload and cross-checks their outputs.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "a2g/reference.hpp"
#include "a2g/rng.hpp"

using namespace a2g;

namespace {

CsiTensor random_tensor(std::size_t snapshots, std::size_t rows, std::size_t cols,
                        std::size_t bins, std::uint64_t seed) {
    MeasurementConfig config;
    config.array_rows = rows;
    config.array_cols = cols;
    config.num_freq_bins = bins;
    CsiTensor tensor = make_tensor(config, snapshots);
    Rng rng(seed);
    for (cd& v : tensor.data) {
        v = rng.next_complex_gaussian();
    }
    return tensor;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

double max_abs_diff_c(std::span<const cd> a, std::span<const cd> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

template <typename F>
double time_ms(F&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void print_row(const char* name, double serial_ms, double parallel_ms, double diff) {
    std::printf("%-22s %10.1f %10.1f %8.2fx   max|diff| %.3g\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, diff);
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t snapshots = 1200;
    if (argc > 1) {
        snapshots = static_cast<std::size_t>(std::strtoull(argv[1], nullptr, 10));
    }
    const std::size_t window = 20;

    std::printf("workload: T=%zu M=64 F=100, %d threads\n", snapshots, omp_get_max_threads());
    const CsiTensor tensor = random_tensor(snapshots, 8, 8, 100, 42);

    {
        std::vector<cd> serial;
        std::vector<cd> parallel;
        const double ts = time_ms([&] { serial = ref::impulse_response(tensor); });
        const double tp = time_ms([&] { parallel = impulse_response(tensor); });
        print_row("impulse_response", ts, tp, max_abs_diff_c(serial, parallel));
    }
    {
        PdpSeries serial;
        PdpSeries parallel;
        const double ts = time_ms([&] { serial = ref::averaged_pdp(tensor, window); });
        const double tp = time_ms([&] { parallel = averaged_pdp(tensor, window); });
        print_row("averaged_pdp", ts, tp, max_abs_diff(serial.averaged, parallel.averaged));
    }
    {
        std::vector<Vec3> positions(tensor.num_snapshots());
        for (std::size_t t = 0; t < positions.size(); ++t) {
            positions[t] = Vec3{-15.0 + 30.0 * static_cast<double>(t) /
                                           static_cast<double>(positions.size()),
                                12.6, 11.0};
        }
        const TrajectoryFrame frame{Vec3{0.0, 0.0, 11.0}, Vec3{1.0, 0.0, 0.0}};
        CmdMapParams params;
        params.window = window;
        params.stride = std::max<std::size_t>(snapshots / 60, 1);
        CmdMap serial;
        CmdMap parallel;
        const double ts = time_ms(
            [&] { serial = ref::cmd_map(tensor, positions, CmdAxis::distance, params, frame); });
        const double tp = time_ms(
            [&] { parallel = cmd_map(tensor, positions, CmdAxis::distance, params, frame); });
        print_row("cmd_map", ts, tp, max_abs_diff(serial.values, parallel.values));
    }
    {
        FreqCorr serial;
        FreqCorr parallel;
        const std::size_t reps = std::min<std::size_t>(40, snapshots - window + 1);
        const double ts = time_ms([&] {
            for (std::size_t i = 0; i < reps; ++i) {
                serial = ref::freq_corr(tensor, i, window);
            }
        });
        // freq_corr is serial per position; the pipeline parallelizes across
        // positions, emulated here with an omp loop.
        std::vector<FreqCorr> out(reps);
        const double tp = time_ms([&] {
#pragma omp parallel for schedule(dynamic)
            for (long long i = 0; i < static_cast<long long>(reps); ++i) {
                out[static_cast<std::size_t>(i)] =
                    freq_corr(tensor, static_cast<std::size_t>(i), window);
            }
        });
        parallel = out[reps - 1];
        print_row("freq_corr batch", ts, tp, max_abs_diff_c(serial.values, parallel.values));
    }
    return 0;
}
