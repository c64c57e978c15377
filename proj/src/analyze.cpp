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

#include "a2g/analyze.hpp"

#include <algorithm>
#include <cmath>

#include "a2g/csv.hpp"

namespace a2g {

double mean(std::span<const double> values) {
    if (values.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    return sum / static_cast<double>(values.size());
}

double stddev(std::span<const double> values) {
    if (values.size() < 2) {
        return 0.0;
    }
    const double m = mean(values);
    double acc = 0.0;
    for (double v : values) {
        acc += (v - m) * (v - m);
    }
    return std::sqrt(acc / static_cast<double>(values.size()));
}

namespace {

/// Nearest angle-grid region entry for a given snapshot time.
const StationaryRegionEntry& nearest_by_time(const std::vector<StationaryRegionEntry>& entries,
                                             double t_s) {
    std::size_t best = 0;
    double best_dist = std::abs(entries[0].t_ref - t_s);
    for (std::size_t i = 1; i < entries.size(); ++i) {
        const double d = std::abs(entries[i].t_ref - t_s);
        if (d < best_dist) {
            best_dist = d;
            best = i;
        }
    }
    return entries[best];
}

void write_cdf_rows(CsvWriter& out, const std::string& metric, std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        out.row(metric, values[i], (static_cast<double>(i) + 1.0) / n);
    }
}

}  // namespace

AnalysisReport run_analysis(const CsiTensor& tensor, std::span<const Vec3> positions,
                            const AnalysisParams& params) {
    params.validate();
    tensor.validate();
    if (positions.size() != tensor.num_snapshots()) {
        throw data_error("analysis: need one position per snapshot");
    }
    if (params.window > tensor.num_snapshots()) {
        throw config_error("analysis: window exceeds the record length");
    }

    AnalysisReport report;

    // Delay domain: averaged PDP, relative-delay reference, received power.
    report.pdp = averaged_pdp(tensor, params.window);
    rereference_delays(report.pdp);
    if (params.pdp_pad > 1) {
        report.pdp_display = averaged_pdp(tensor, params.window, params.pdp_pad);
        rereference_delays(*report.pdp_display);
    }
    report.power_total = received_power(report.pdp, PowerMode::total);
    report.power_los = received_power(report.pdp, PowerMode::los_tap);
    report.power_total_db = to_db_normalized(report.power_total);
    report.power_los_db = to_db_normalized(report.power_los);

    // Temporal stationarity on both axes.
    const TrajectoryFrame frame{tensor.config.bs_position_m,
                                positions.back() - positions.front()};
    const CmdMapParams map_params = params.map_params();
    report.distance_map = cmd_map(tensor, positions, CmdAxis::distance, map_params, frame);
    report.angle_map = cmd_map(tensor, positions, CmdAxis::angle, map_params, frame);
    report.distance_regions =
        stationary_region(report.distance_map, params.c_th, tensor.config.speed_mps);
    report.angle_regions =
        stationary_region(report.angle_map, params.c_th, tensor.config.speed_mps);

    report.grid_angles_deg.resize(report.distance_map.size());
    for (std::size_t i = 0; i < report.distance_map.size(); ++i) {
        report.grid_angles_deg[i] =
            angle_to_bs_deg(positions[report.distance_map.snapshot_index[i]],
                            frame.bs_position, frame.travel_direction);
    }

    // Frequency stationarity at the distance-grid positions, moments on the
    // noise-clipped averaged PDP.
    PdpSeries clipped = report.pdp;
    clip_noise_floor(clipped, params.clip_db);
    const std::size_t grid = report.distance_map.size();
    report.delay_stats.resize(grid);
    report.coherence.resize(grid);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(grid); ++i) {
        const auto gi = static_cast<std::size_t>(i);
        const std::size_t snap = report.distance_map.snapshot_index[gi];
        report.delay_stats[gi] =
            delay_spread_rereferenced(clipped.profile(snap), clipped.delay_step_s);
        const FreqCorr fc = freq_corr(tensor, snap, params.window);
        report.coherence[gi] = coherence_bandwidth(fc, tensor.config.bandwidth_hz);
    }

    // Spatial correlation at the snapshot closest to the requested angle.
    {
        double best = std::abs(report.grid_angles_deg[0] - params.spatial_angle_deg);
        std::size_t best_i = 0;
        for (std::size_t i = 1; i < grid; ++i) {
            const double d = std::abs(report.grid_angles_deg[i] - params.spatial_angle_deg);
            if (d < best) {
                best = d;
                best_i = i;
            }
        }
        report.spatial_snapshot = report.distance_map.snapshot_index[best_i];
    }
    const AntennaCorr corr = antenna_corr(tensor, report.spatial_snapshot, params.window,
                                          params.band_begin, params.band_end);
    report.spatial = spatial_corr(corr.matrix, tensor.config.array_rows,
                                  tensor.config.array_cols, params.element_order);
    report.spatial_element_map =
        element_map(report.spatial, params.spatial_ref_row, params.spatial_ref_col);
    report.region_hi =
        corr_region(report.spatial_element_map, report.spatial.rows, report.spatial.cols,
                    params.spatial_ref_row, params.spatial_ref_col, params.rho_threshold_hi);
    report.region_lo =
        corr_region(report.spatial_element_map, report.spatial.rows, report.spatial.cols,
                    params.spatial_ref_row, params.spatial_ref_col, params.rho_threshold_lo);

    // Summary row.
    std::vector<double> sd(grid);
    std::vector<double> s_tau_ns(grid);
    std::vector<double> b_coh_mhz(grid);
    for (std::size_t i = 0; i < grid; ++i) {
        sd[i] = report.distance_regions[i].extent;
        s_tau_ns[i] = report.delay_stats[i].rms_spread_s * 1e9;
        b_coh_mhz[i] = report.coherence[i].b_coh_hz * 1e-6;
    }
    std::vector<double> sa(report.angle_regions.size());
    for (std::size_t i = 0; i < sa.size(); ++i) {
        sa[i] = report.angle_regions[i].extent;
    }

    TrajectorySummary& s = report.summary;
    s.label = params.label;
    s.sd_mean_m = mean(sd);
    s.sd_std_m = stddev(sd);
    s.sa_mean_deg = mean(sa);
    s.sa_std_deg = stddev(sa);
    s.s_tau_mean_ns = mean(s_tau_ns);
    s.s_tau_std_ns = stddev(s_tau_ns);
    s.b_coh_mean_mhz = mean(b_coh_mhz);
    s.b_coh_std_mhz = stddev(b_coh_mhz);
    s.saturated_count = static_cast<std::size_t>(
        std::count_if(report.coherence.begin(), report.coherence.end(),
                      [](const CoherenceResult& c) { return c.saturated; }));
    s.alpha = (s.s_tau_mean_ns > 0.0 && s.b_coh_mean_mhz > 0.0)
                  ? alpha_factor(s.s_tau_mean_ns * 1e-9, s.b_coh_mean_mhz * 1e6)
                  : 0.0;
    return report;
}

namespace {

void write_pdp_csv(const AnalysisReport& report, const std::filesystem::path& dir) {
    const PdpSeries& pdp = report.pdp_display ? *report.pdp_display : report.pdp;
    CsvWriter raw(dir / "pdp.csv");
    raw.header("t_s,tau_ns,power");
    CsvWriter db(dir / "pdp_db.csv");
    db.header("t_s,tau_ns,power_db");

    double peak = 0.0;
    for (std::size_t i = 0; i < report.distance_map.size(); ++i) {
        const auto p = pdp.profile(report.distance_map.snapshot_index[i]);
        peak = std::max(peak, *std::max_element(p.begin(), p.end()));
    }
    for (std::size_t i = 0; i < report.distance_map.size(); ++i) {
        const std::size_t snap = report.distance_map.snapshot_index[i];
        const auto p = pdp.profile(snap);
        for (std::size_t f = 0; f < pdp.num_delay_bins; ++f) {
            const double tau_ns = static_cast<double>(f) * pdp.delay_step_s * 1e9;
            raw.row(pdp.times_s[snap], tau_ns, p[f]);
            const double v_db =
                (peak > 0.0 && p[f] > 0.0) ? 10.0 * std::log10(p[f] / peak) : -400.0;
            db.row(pdp.times_s[snap], tau_ns, v_db);
        }
    }
    raw.commit();
    db.commit();
}

void write_power_csv(const AnalysisReport& report, const std::filesystem::path& dir) {
    CsvWriter out(dir / "power.csv");
    out.header("t_s,power_total,power_los,power_total_db,power_los_db");
    for (std::size_t i = 0; i < report.pdp.rows(); ++i) {
        out.row(report.pdp.times_s[i], report.power_total[i], report.power_los[i],
                report.power_total_db[i], report.power_los_db[i]);
    }
    out.commit();
}

void write_map_csv(const CmdMap& map, const std::filesystem::path& file) {
    CsvWriter out(file);
    out.header("pos_i,pos_j,d_corr");
    const std::size_t n = map.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.row(map.axis_values[i], map.axis_values[j], map.at(i, j));
        }
    }
    out.commit();
}

void write_stationarity_csv(const AnalysisReport& report, const std::filesystem::path& dir) {
    CsvWriter out(dir / "stationarity.csv");
    out.header("position_m,angle_deg,SD_m,SA_deg,S_N_dist,S_N_angle");
    for (std::size_t i = 0; i < report.distance_regions.size(); ++i) {
        const StationaryRegionEntry& d = report.distance_regions[i];
        const StationaryRegionEntry& a = nearest_by_time(report.angle_regions, d.t_ref);
        out.row(report.distance_map.axis_values[i], report.grid_angles_deg[i], d.extent,
                a.extent, d.normalized, a.normalized);
    }
    out.commit();

    CsvWriter cdf(dir / "cdf_stationarity.csv");
    cdf.header("metric,value,cdf");
    std::vector<double> sd;
    std::vector<double> snd;
    for (const auto& e : report.distance_regions) {
        sd.push_back(e.extent);
        snd.push_back(e.normalized);
    }
    std::vector<double> sa;
    std::vector<double> sna;
    for (const auto& e : report.angle_regions) {
        sa.push_back(e.extent);
        sna.push_back(e.normalized);
    }
    write_cdf_rows(cdf, "SD_m", sd);
    write_cdf_rows(cdf, "SA_deg", sa);
    write_cdf_rows(cdf, "S_N_dist", snd);
    write_cdf_rows(cdf, "S_N_angle", sna);
    cdf.commit();
}

void write_frequency_csv(const AnalysisReport& report, const std::filesystem::path& dir) {
    CsvWriter out(dir / "freq_stats.csv");
    out.header("position_m,S_tau_ns,B_coh_MHz,saturated_flag");
    std::vector<double> s_tau;
    std::vector<double> b_coh;
    for (std::size_t i = 0; i < report.delay_stats.size(); ++i) {
        const double tau_ns = report.delay_stats[i].rms_spread_s * 1e9;
        const double coh_mhz = report.coherence[i].b_coh_hz * 1e-6;
        out.row(report.distance_map.axis_values[i], tau_ns, coh_mhz,
                report.coherence[i].saturated ? 1 : 0);
        s_tau.push_back(tau_ns);
        b_coh.push_back(coh_mhz);
    }
    out.commit();

    CsvWriter cdf(dir / "cdf_frequency.csv");
    cdf.header("metric,value,cdf");
    write_cdf_rows(cdf, "S_tau_ns", s_tau);
    write_cdf_rows(cdf, "B_coh_MHz", b_coh);
    cdf.commit();
}

void write_grid_csv(std::span<const double> grid, std::size_t rows, std::size_t cols,
                    const std::filesystem::path& file) {
    CsvWriter out(file);
    for (std::size_t r = 0; r < rows; ++r) {
        std::string line;
        for (std::size_t c = 0; c < cols; ++c) {
            line += (c == 0 ? "" : ",") + format_number(grid[r * cols + c]);
        }
        out.header(line);
    }
    out.commit();
}

void write_spatial_csv(const AnalysisReport& report, const std::filesystem::path& dir) {
    const SpatialCorr& sc = report.spatial;
    const std::size_t n = sc.num_elements();
    write_grid_csv(sc.rho, n, n, dir / "spatial_rho.csv");
    write_grid_csv(report.spatial_element_map, sc.rows, sc.cols, dir / "element_map.csv");

    auto mask_grid = [&](const CorrRegion& region, const std::filesystem::path& file) {
        std::vector<double> grid(region.mask.begin(), region.mask.end());
        write_grid_csv(grid, sc.rows, sc.cols, file);
    };
    mask_grid(report.region_hi, dir / "region_hi.csv");
    mask_grid(report.region_lo, dir / "region_lo.csv");

    CsvWriter scores(dir / "offset_scores.csv");
    scores.header("offset,score");
    for (std::size_t off = 1; off < n; ++off) {
        scores.row(off, offset_diagonal_score(sc, off));
    }
    scores.commit();
}

}  // namespace

void write_report_csv(const AnalysisReport& report, const std::filesystem::path& out_dir,
                      const RunManifest& manifest) {
    std::filesystem::create_directories(out_dir);
    write_pdp_csv(report, out_dir);
    write_power_csv(report, out_dir);
    write_map_csv(report.distance_map, out_dir / "cmd_distance.csv");
    write_map_csv(report.angle_map, out_dir / "cmd_angle.csv");
    write_stationarity_csv(report, out_dir);
    write_frequency_csv(report, out_dir);
    write_spatial_csv(report, out_dir);
    write_batch_summary({report.summary}, out_dir / "summary.csv");
    manifest.save(out_dir / "run_manifest.cfg");
}

void write_batch_summary(const std::vector<TrajectorySummary>& rows,
                         const std::filesystem::path& file) {
    CsvWriter out(file);
    out.header(
        "trajectory,SD_mean_m,SD_std_m,SA_mean_deg,SA_std_deg,S_tau_mean_ns,S_tau_std_ns,"
        "B_coh_mean_MHz,B_coh_std_MHz,alpha,saturated_positions");
    for (const TrajectorySummary& s : rows) {
        out.row(s.label, s.sd_mean_m, s.sd_std_m, s.sa_mean_deg, s.sa_std_deg, s.s_tau_mean_ns,
                s.s_tau_std_ns, s.b_coh_mean_mhz, s.b_coh_std_mhz, s.alpha, s.saturated_count);
    }
    out.commit();
}

}  // namespace a2g
