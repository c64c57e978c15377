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

#include <filesystem>
#include <optional>
#include <vector>

#include "a2g/frequency.hpp"
#include "a2g/manifest.hpp"
#include "a2g/pdp.hpp"
#include "a2g/spatial.hpp"
#include "a2g/temporal.hpp"

namespace a2g {

/// Per-trajectory summary row: mean/std of the stationarity and frequency
/// metrics plus the coherence-bandwidth/delay-spread scaling factor.
struct TrajectorySummary {
    std::string label;
    double sd_mean_m = 0.0;
    double sd_std_m = 0.0;
    double sa_mean_deg = 0.0;
    double sa_std_deg = 0.0;
    double s_tau_mean_ns = 0.0;
    double s_tau_std_ns = 0.0;
    double b_coh_mean_mhz = 0.0;
    double b_coh_std_mhz = 0.0;
    double alpha = 0.0;
    std::size_t saturated_count = 0;  // positions where B_coh hit the full bandwidth
};

struct AnalysisReport {
    PdpSeries pdp;  // window-averaged, delay re-referenced, unclipped
    std::optional<PdpSeries> pdp_display;  // oversampled variant when pdp_pad > 1
    std::vector<double> power_total;
    std::vector<double> power_los;
    std::vector<double> power_total_db;
    std::vector<double> power_los_db;

    CmdMap distance_map;
    CmdMap angle_map;
    std::vector<StationaryRegionEntry> distance_regions;
    std::vector<StationaryRegionEntry> angle_regions;
    std::vector<double> grid_angles_deg;  // angle to bs at the distance-grid positions

    std::vector<DelayStatsEntry> delay_stats;   // at the distance-grid positions
    std::vector<CoherenceResult> coherence;     // same positions

    SpatialCorr spatial;
    std::size_t spatial_snapshot = 0;
    std::vector<double> spatial_element_map;  // reference element's grid map
    CorrRegion region_hi;
    CorrRegion region_lo;

    TrajectorySummary summary;
};

/// Full pipeline: averaged PDP and received power, distance/angle CMD maps
/// with stationary regions, per-position delay spread and coherence
/// bandwidth, spatial correlation at the reference angle, and the summary.
AnalysisReport run_analysis(const CsiTensor& tensor, std::span<const Vec3> positions,
                            const AnalysisParams& params);

/// Emit the full CSV bundle plus the manifest into out_dir (created if
/// needed). Files are written atomically; identical inputs produce
/// byte-identical outputs.
void write_report_csv(const AnalysisReport& report, const std::filesystem::path& out_dir,
                      const RunManifest& manifest);

/// One summary row per trajectory, same columns as the per-run summary.
void write_batch_summary(const std::vector<TrajectorySummary>& rows,
                         const std::filesystem::path& file);

double mean(std::span<const double> values);
double stddev(std::span<const double> values);  // population

}  // namespace a2g
