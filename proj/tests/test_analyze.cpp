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

#include "a2g/analyze.hpp"
#include "a2g/sounder.hpp"
#include "a2g/synth.hpp"
#include "test_support.hpp"

using namespace a2g;

namespace {

AnalysisParams short_pass_params() {
    AnalysisParams params;
    params.window = 10;
    params.stride = 10;
    params.angle_min_deg = 40.5;
    params.angle_max_deg = 43.0;
    params.angle_step_deg = 0.1;
    params.spatial_ref_row = 2;
    params.spatial_ref_col = 2;
    return params;
}

}  // namespace

TEST_CASE("los-only capture: sub-bin delay spread and saturated coherence bandwidth") {
    MeasurementConfig config = test::small_config(4, 4, 50);
    Scene scene = test::parallel_pass_scene(config, 11.0);
    scene.scatterers.clear();
    scene.ground_reflection = cd(0.0, 0.0);
    const CsiTensor tensor = synth_csi(scene, config, 2.0);
    const auto positions = synth_positions(scene, tensor);

    const AnalysisReport report = run_analysis(tensor, positions, short_pass_params());
    const double bin_ns = tensor.config.delay_step_s() * 1e9;
    CHECK(report.summary.s_tau_mean_ns < bin_ns);
    CHECK(report.summary.saturated_count == report.coherence.size());
    CHECK(report.summary.b_coh_mean_mhz == doctest::Approx(18.0));
}

TEST_CASE("estimated capture analyzes like the ground truth at 30 dB snr") {
    MeasurementConfig config = test::small_config(4, 4, 50);
    const Scene scene = test::parallel_pass_scene(config, 11.0);
    const CsiTensor truth = synth_csi(scene, config, 2.0);
    const EstimateResult est = estimate_csi(scene, config, 2.0, 3, 30.0, 11);

    const auto positions = synth_positions(scene, truth);
    const AnalysisParams params = short_pass_params();
    const AnalysisReport truth_report = run_analysis(truth, positions, params);
    const AnalysisReport est_report = run_analysis(est.estimated, positions, params);

    const double bin_ns = truth.config.delay_step_s() * 1e9;
    CHECK(std::abs(est_report.summary.s_tau_mean_ns - truth_report.summary.s_tau_mean_ns) <
          bin_ns);
}

TEST_CASE("summary statistics come from the per-position series") {
    MeasurementConfig config = test::small_config(2, 2, 25);
    const Scene scene = test::parallel_pass_scene(config, 8.0);
    const CsiTensor tensor = synth_csi(scene, config, 1.5);
    const auto positions = synth_positions(scene, tensor);
    AnalysisParams params = short_pass_params();
    params.spatial_ref_row = 1;
    params.spatial_ref_col = 1;
    const AnalysisReport report = run_analysis(tensor, positions, params);

    std::vector<double> sd;
    for (const auto& e : report.distance_regions) {
        sd.push_back(e.extent);
    }
    CHECK(report.summary.sd_mean_m == doctest::Approx(mean(sd)).epsilon(1e-12));
    CHECK(report.summary.sd_std_m == doctest::Approx(stddev(sd)).epsilon(1e-12));
    CHECK(report.summary.alpha ==
          doctest::Approx(1.0 / (report.summary.b_coh_mean_mhz * 1e6 *
                                 report.summary.s_tau_mean_ns * 1e-9))
              .epsilon(1e-12));
    // every region is anchored at its reference position
    for (const auto& e : report.angle_regions) {
        CHECK(e.t_min <= e.t_ref);
        CHECK(e.t_ref <= e.t_max);
        CHECK(e.normalized >= 0.0);
        CHECK(e.normalized <= 1.0);
    }
}
