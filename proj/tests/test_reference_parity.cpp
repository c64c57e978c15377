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

// The production kernels (FFTW transform, OpenMP loops) must agree with the
// serial reference transcriptions on random inputs.

#include <doctest.h>

#include <cmath>

#include "a2g/reference.hpp"
#include "test_support.hpp"

using namespace a2g;

TEST_CASE("impulse response matches the direct dft") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const CsiTensor tensor = test::random_tensor(4, 2, 2, 25, 200 + seed);
        const auto fast = impulse_response(tensor);
        const auto slow = ref::impulse_response(tensor);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t i = 0; i < fast.size(); ++i) {
            CHECK(std::abs(fast[i] - slow[i]) < 1e-9);
        }
    }
}

TEST_CASE("averaged pdp matches the nested-loop mean") {
    const CsiTensor tensor = test::random_tensor(9, 2, 1, 7, 210);
    const PdpSeries fast = averaged_pdp(tensor, 3);
    const PdpSeries slow = ref::averaged_pdp(tensor, 3);
    REQUIRE(fast.averaged.size() == slow.averaged.size());
    for (std::size_t i = 0; i < fast.averaged.size(); ++i) {
        CHECK(fast.averaged[i] == doctest::Approx(slow.averaged[i]).epsilon(1e-9));
    }
    // granular route: transform -> instantaneous -> window mean
    const auto power = instantaneous_pdp(impulse_response(tensor));
    const PdpSeries granular = averaged_pdp_from_power(
        power, 9, tensor.num_antennas(), 7, 3, tensor.timestamps_s, tensor.config.delay_step_s());
    for (std::size_t i = 0; i < fast.averaged.size(); ++i) {
        CHECK(granular.averaged[i] == doctest::Approx(fast.averaged[i]).epsilon(1e-12));
    }
}

TEST_CASE("antenna correlation matches the brute-force triple loop") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const std::size_t snapshots = 5 + seed % 3;
        const CsiTensor tensor = test::random_tensor(snapshots, 2, 2, 6, 220 + seed);
        const std::size_t window = 1 + seed % 4;
        const AntennaCorr fast = antenna_corr(tensor, 1, window, 1, 5);
        const HermitianMatrix slow = ref::antenna_corr(tensor, 1, window, 1, 5);
        for (std::size_t i = 0; i < slow.values.size(); ++i) {
            CHECK(std::abs(fast.matrix.values[i] - slow.values[i]) <=
                  1e-9 * std::abs(slow.values[i]) + 1e-12);
        }
    }
}

TEST_CASE("freq corr matches the direct per-lag sums") {
    const CsiTensor tensor = test::random_tensor(6, 2, 2, 12, 230);
    const FreqCorr fast = freq_corr(tensor, 1, 4);
    const FreqCorr slow = ref::freq_corr(tensor, 1, 4);
    REQUIRE(fast.values.size() == slow.values.size());
    for (std::size_t i = 0; i < fast.values.size(); ++i) {
        CHECK(std::abs(fast.values[i] - slow.values[i]) < 1e-9);
    }
}

TEST_CASE("cmd maps agree between the parallel and serial drivers") {
    const CsiTensor tensor = test::random_tensor(24, 2, 2, 5, 240);
    std::vector<Vec3> positions(24);
    for (std::size_t t = 0; t < 24; ++t) {
        positions[t] = Vec3{-6.0 + 0.5 * static_cast<double>(t), 12.0, 11.0};
    }
    const TrajectoryFrame frame{Vec3{0.0, 0.0, 11.0}, Vec3{1.0, 0.0, 0.0}};
    CmdMapParams params;
    params.window = 4;
    params.stride = 2;
    for (const CmdAxis axis : {CmdAxis::distance, CmdAxis::angle}) {
        CmdMapParams p = params;
        if (axis == CmdAxis::angle) {
            p.angle_min_deg = 65.0;
            p.angle_max_deg = 105.0;
            p.angle_step_deg = 2.5;
        }
        const CmdMap fast = cmd_map(tensor, positions, axis, p, frame);
        const CmdMap slow = ref::cmd_map(tensor, positions, axis, p, frame);
        REQUIRE(fast.size() == slow.size());
        CHECK(fast.snapshot_index == slow.snapshot_index);
        for (std::size_t i = 0; i < fast.values.size(); ++i) {
            CHECK(fast.values[i] == doctest::Approx(slow.values[i]).epsilon(1e-9));
        }
    }
}
