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

#include <doctest.h>

#include <cmath>

#include "a2g/sounder.hpp"
#include "test_support.hpp"

using namespace a2g;

TEST_CASE("zadoff-chu is constant modulus with zero cyclic autocorrelation") {
    for (const auto& [root, length] : {std::pair{25u, 63u}, {1u, 63u}, {3u, 100u}}) {
        const PilotSequence seq = zadoff_chu(root, length);
        for (const cd& x : seq.samples) {
            CHECK(std::abs(std::abs(x) - 1.0) < 1e-12);
        }
        for (std::size_t shift = 1; shift < length; ++shift) {
            cd acc{};
            for (std::size_t k = 0; k < length; ++k) {
                acc += seq.samples[k] * std::conj(seq.samples[(k + shift) % length]);
            }
            CHECK(std::abs(acc) < 1e-9);
        }
    }
}

TEST_CASE("zadoff-chu starts at one and rejects non-coprime roots") {
    const PilotSequence seq = zadoff_chu(25, 63);
    CHECK(std::abs(seq.samples[0] - cd(1.0, 0.0)) < 1e-15);
    CHECK_THROWS_AS(zadoff_chu(21, 63), config_error);  // gcd 21
    CHECK_THROWS_AS(zadoff_chu(0, 63), config_error);
    CHECK_THROWS_AS(zadoff_chu(63, 63), config_error);
}

TEST_CASE("pss detect finds a noiseless embedding exactly") {
    const PilotSequence ref = zadoff_chu(25, 63);
    std::vector<cd> rx(2000, cd{});
    std::copy(ref.samples.begin(), ref.samples.end(), rx.begin() + 1000);
    const SyncResult r = pss_detect(rx, ref, 0.7);
    CHECK(r.detected);
    CHECK(r.offset == 1000);
    CHECK(r.peak_metric == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("pure noise yields no sync") {
    const PilotSequence ref = zadoff_chu(25, 63);
    Rng rng(31);
    std::vector<cd> rx(1500);
    for (cd& v : rx) {
        v = rng.next_complex_gaussian();
    }
    const SyncResult r = pss_detect(rx, ref, 0.7);
    CHECK_FALSE(r.detected);
}

TEST_CASE("noiseless offsets are recovered exactly at random positions") {
    const PilotSequence ref = zadoff_chu(25, 63);
    Rng rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t offset = rng.next_u64() % (1200 - ref.length());
        std::vector<cd> rx(1200, cd{});
        // random complex gain on the embedded copy
        const cd gain = cd(0.2, 0.0) + cd(rng.next_double(), rng.next_double());
        for (std::size_t k = 0; k < ref.length(); ++k) {
            rx[offset + k] = gain * ref.samples[k];
        }
        const SyncResult r = pss_detect(rx, ref, 0.5);
        CHECK(r.detected);
        CHECK(r.offset == offset);
    }
}

TEST_CASE("0 dB snr detection succeeds in at least 99 of 100 seeded trials") {
    const PilotSequence ref = zadoff_chu(25, 63);
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(1000 + seed);
        std::vector<cd> rx(2000, cd{});
        std::copy(ref.samples.begin(), ref.samples.end(), rx.begin() + 500);
        // unit signal power per sample, unit noise power: 0 dB
        for (cd& v : rx) {
            v += rng.next_complex_gaussian();
        }
        const SyncResult r = pss_detect(rx, ref, 0.3);
        if (r.detected && r.offset == 500) {
            ++hits;
        }
    }
    CHECK(hits >= 99);
}

TEST_CASE("ls estimate is exact division and flags zero pilot bins") {
    const std::size_t antennas = 4;
    const std::size_t bins = 16;
    const CsiTensor truth = test::random_tensor(1, 2, 2, bins, 51);
    const PilotSequence pilot = zadoff_chu(3, bins);
    std::vector<cd> rx(antennas * bins);
    for (std::size_t m = 0; m < antennas; ++m) {
        for (std::size_t f = 0; f < bins; ++f) {
            rx[m * bins + f] = truth.at(0, m, f) * pilot.samples[f];
        }
    }
    const auto est = ls_estimate(rx, pilot.samples, antennas);
    for (std::size_t i = 0; i < est.size(); ++i) {
        CHECK(std::abs(est[i] - truth.data[i]) < 1e-12 * std::abs(truth.data[i]) + 1e-300);
    }

    std::vector<cd> bad_pilot(pilot.samples.begin(), pilot.samples.end());
    bad_pilot[5] = cd(0.0, 0.0);
    CHECK_THROWS_WITH_AS(ls_estimate(rx, bad_pilot, antennas), doctest::Contains("bin 5"),
                         numeric_error);
}

TEST_CASE("ls nmse tracks the snr over many bins") {
    const std::size_t bins = 1000;
    const PilotSequence pilot = zadoff_chu(7, bins);
    Rng rng(61);
    const double snr_db = 15.0;
    const double noise_scale = std::pow(10.0, -snr_db / 20.0);
    std::vector<cd> truth(bins);
    std::vector<cd> rx(bins);
    for (std::size_t f = 0; f < bins; ++f) {
        truth[f] = rng.next_complex_gaussian();
        rx[f] = truth[f] * pilot.samples[f] + noise_scale * rng.next_complex_gaussian();
    }
    const auto est = ls_estimate(rx, pilot.samples, 1);
    double err = 0.0;
    double ref = 0.0;
    for (std::size_t f = 0; f < bins; ++f) {
        err += std::norm(est[f] - truth[f]);
        ref += std::norm(truth[f]);
    }
    const double nmse = err / ref;
    const double expected = std::pow(10.0, -snr_db / 10.0);
    CHECK(nmse > expected / 2.0);
    CHECK(nmse < expected * 2.0);
}

TEST_CASE("end-to-end noise-free chain recovers the tensor below -60 dB nmse") {
    MeasurementConfig config = test::small_config(4, 4, 25);
    const Scene scene = test::parallel_pass_scene(config, 11.0);
    const EstimateResult result = estimate_csi(scene, config, 0.05, 3, std::nullopt, 1);
    CHECK(result.nmse_db < -60.0);
}
