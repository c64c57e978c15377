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

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "a2g/analyze.hpp"
#include "a2g/csi_io.hpp"
#include "a2g/sounder.hpp"
#include "a2g/synth.hpp"
#include "a2g/trajectory.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitNumeric = 4;

fs::path default_out_dir(const std::string& requested, const std::string& name) {
    if (!requested.empty()) {
        return requested;
    }
    if (const char* root = std::getenv("A2G_OUT_ROOT")) {
        return fs::path(root) / name;
    }
    return fs::path("a2g_out") / name;
}

struct AnalyzeFlags {
    std::string csi_path;
    std::string traj_path;
    std::string out_dir;
    std::string manifest_path;
    std::string element_order = "column_stacked";
    std::vector<std::size_t> spatial_ref{3, 3};
    a2g::AnalysisParams params;
};

void add_analysis_flags(CLI::App* cmd, AnalyzeFlags& flags) {
    cmd->add_option("--w,--window", flags.params.window, "Averaging window in snapshots");
    cmd->add_option("--c-th", flags.params.c_th, "CMD stationarity threshold");
    cmd->add_option("--band-begin", flags.params.band_begin, "First frequency bin of the band");
    cmd->add_option("--band-end", flags.params.band_end, "One past the last band bin (0: all)");
    cmd->add_option("--stride", flags.params.stride,
                    "Snapshot stride between distance-axis reference positions");
    cmd->add_option("--angle-min", flags.params.angle_min_deg, "Angle grid start, degrees");
    cmd->add_option("--angle-max", flags.params.angle_max_deg, "Angle grid end, degrees");
    cmd->add_option("--angle-step", flags.params.angle_step_deg, "Angle grid step, degrees");
    cmd->add_option("--clip-db", flags.params.clip_db,
                    "Noise floor clip below the per-profile peak, dB");
    cmd->add_option("--pdp-pad", flags.params.pdp_pad,
                    "Delay oversampling factor for the PDP export (display only)");
    cmd->add_option("--rho-hi", flags.params.rho_threshold_hi,
                    "Upper spatial correlation threshold");
    cmd->add_option("--rho-lo", flags.params.rho_threshold_lo,
                    "Lower spatial correlation threshold");
    cmd->add_option("--spatial-ref", flags.spatial_ref,
                    "Reference element as 'row col'")->expected(2);
    cmd->add_option("--spatial-angle", flags.params.spatial_angle_deg,
                    "Angle to the bs at which spatial correlation is evaluated");
    cmd->add_option("--element-order", flags.element_order,
                    "Element index order: column_stacked or row_stacked");
    cmd->add_option("--label", flags.params.label, "Trajectory label for the summary row");
}

void finalize_params(AnalyzeFlags& flags) {
    flags.params.spatial_ref_row = flags.spatial_ref.at(0);
    flags.params.spatial_ref_col = flags.spatial_ref.at(1);
    if (flags.element_order == "row_stacked") {
        flags.params.element_order = a2g::ElementOrder::row_stacked;
    } else if (flags.element_order == "column_stacked") {
        flags.params.element_order = a2g::ElementOrder::column_stacked;
    } else {
        throw a2g::config_error("unknown element order: " + flags.element_order);
    }
    flags.params.validate();
}

a2g::MeasurementConfig load_config(const std::string& path) {
    if (path.empty()) {
        return a2g::MeasurementConfig{};
    }
    return a2g::MeasurementConfig::load(path);
}

int run_synth(const std::string& scene_path, const std::string& config_path, double duration,
              const std::string& out, const std::string& traj_out,
              std::optional<std::uint64_t> seed, std::optional<double> snr) {
    const a2g::MeasurementConfig config = load_config(config_path);
    a2g::Scene scene = a2g::Scene::load(scene_path, config);
    if (seed) {
        scene.seed = *seed;
    }
    if (snr) {
        scene.noise_snr_db = snr;
    }
    const a2g::CsiTensor tensor = a2g::synth_csi(scene, config, duration);
    const std::size_t bytes = a2g::store_csi_file(tensor, out);
    std::printf("synth: %zu snapshots x %zu antennas x %zu bins -> %s (%zu bytes)\n",
                tensor.num_snapshots(), tensor.num_antennas(), tensor.num_bins(), out.c_str(),
                bytes);
    if (!traj_out.empty()) {
        a2g::synth_trajectory_log(scene, config, duration).save_csv(traj_out);
        std::printf("synth: trajectory log -> %s\n", traj_out.c_str());
    }
    return 0;
}

int run_estimate(const std::string& scene_path, const std::string& config_path, double duration,
                 const std::string& out, std::uint32_t pilot_root, std::optional<double> snr,
                 std::uint64_t seed) {
    const a2g::MeasurementConfig config = load_config(config_path);
    const a2g::Scene scene = a2g::Scene::load(scene_path, config);
    const a2g::EstimateResult result =
        a2g::estimate_csi(scene, config, duration, pilot_root, snr, seed);
    a2g::store_csi_file(result.estimated, out);
    std::printf("estimate: NMSE vs ground truth = %.2f dB -> %s\n", result.nmse_db, out.c_str());
    return 0;
}

int run_analyze(AnalyzeFlags flags) {
    a2g::RunManifest manifest;
    if (!flags.manifest_path.empty()) {
        manifest = a2g::RunManifest::load(flags.manifest_path);
    } else {
        finalize_params(flags);
        manifest.csi_path = flags.csi_path;
        manifest.trajectory_path = flags.traj_path;
        manifest.out_dir = default_out_dir(flags.out_dir, flags.params.label).string();
        manifest.params = flags.params;
    }
    if (manifest.csi_path.empty() || manifest.trajectory_path.empty()) {
        throw a2g::config_error("analyze: --csi and --traj (or --manifest) are required");
    }

    const a2g::CsiTensor tensor = a2g::load_csi_file(manifest.csi_path);
    const a2g::TrajectoryLog log = a2g::TrajectoryLog::load_csv(manifest.trajectory_path);
    const std::vector<a2g::Vec3> positions = a2g::align_trajectory(log, tensor);

    const a2g::AnalysisReport report = a2g::run_analysis(tensor, positions, manifest.params);
    a2g::write_report_csv(report, manifest.out_dir, manifest);
    std::printf("analyze: %s -> %s\n", manifest.csi_path.c_str(), manifest.out_dir.c_str());
    std::printf(
        "analyze: SD %.2f m, SA %.2f deg, S_tau %.1f ns, B_coh %.2f MHz (saturated at %zu of %zu"
        " positions), alpha %.3f\n",
        report.summary.sd_mean_m, report.summary.sa_mean_deg, report.summary.s_tau_mean_ns,
        report.summary.b_coh_mean_mhz, report.summary.saturated_count, report.coherence.size(),
        report.summary.alpha);
    return 0;
}

int run_report(const std::vector<std::string>& scene_paths, const std::string& config_path,
               double duration, const std::string& out_dir, AnalyzeFlags flags,
               std::optional<std::uint64_t> seed) {
    finalize_params(flags);
    const a2g::MeasurementConfig config = load_config(config_path);
    const fs::path root = default_out_dir(out_dir, "report");
    fs::create_directories(root);

    std::vector<a2g::TrajectorySummary> summaries;
    for (const std::string& scene_path : scene_paths) {
        a2g::Scene scene = a2g::Scene::load(scene_path, config);
        if (seed) {
            scene.seed = *seed;
        }
        const std::string label = fs::path(scene_path).stem().string();
        const fs::path dir = root / label;
        fs::create_directories(dir);

        const a2g::CsiTensor tensor = a2g::synth_csi(scene, config, duration);
        const fs::path csi_path = dir / "csi.bin";
        a2g::store_csi_file(tensor, csi_path);
        const a2g::TrajectoryLog log = a2g::synth_trajectory_log(scene, config, duration);
        const fs::path traj_path = dir / "trajectory.csv";
        log.save_csv(traj_path);

        a2g::RunManifest manifest;
        manifest.csi_path = csi_path.string();
        manifest.trajectory_path = traj_path.string();
        manifest.out_dir = dir.string();
        manifest.params = flags.params;
        manifest.params.label = label;

        const std::vector<a2g::Vec3> positions = a2g::align_trajectory(log, tensor);
        const a2g::AnalysisReport report =
            a2g::run_analysis(tensor, positions, manifest.params);
        a2g::write_report_csv(report, dir, manifest);
        summaries.push_back(report.summary);
        std::printf("report: %s done\n", label.c_str());
    }
    a2g::write_batch_summary(summaries, root / "summary.csv");
    std::printf("report: combined summary -> %s\n", (root / "summary.csv").string().c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Air-to-ground massive-MIMO channel synthesis, sounding simulation, and "
                 "stationarity analysis"};
    app.require_subcommand(1);

    // synth
    auto* synth = app.add_subcommand("synth", "Synthesize a CSI capture from a scene file");
    std::string scene_path;
    std::string config_path;
    std::string out_path;
    std::string traj_out;
    double duration = 20.0;
    std::optional<std::uint64_t> seed_opt;
    std::optional<double> snr_opt;
    synth->add_option("--scene", scene_path, "Scene config file")->required();
    synth->add_option("--config", config_path, "Measurement config file (defaults when absent)");
    synth->add_option("--duration", duration, "Capture duration, seconds")->required();
    synth->add_option("--out", out_path, "Output CSI file")->required();
    synth->add_option("--traj-out", traj_out, "Also write the trajectory log CSV");
    synth->add_option("--seed", seed_opt, "Override the scene noise seed");
    synth->add_option("--snr", snr_opt, "Override the scene noise SNR, dB");

    // estimate
    auto* estimate =
        app.add_subcommand("estimate", "Run the pilot + LS sounding chain on a synthetic scene");
    std::string est_scene;
    std::string est_config;
    std::string est_out;
    double est_duration = 1.0;
    std::uint32_t pilot_root = 3;
    std::optional<double> est_snr;
    std::uint64_t est_seed = 1;
    estimate->add_option("--scene", est_scene, "Scene config file")->required();
    estimate->add_option("--config", est_config, "Measurement config file");
    estimate->add_option("--duration", est_duration, "Capture duration, seconds");
    estimate->add_option("--out", est_out, "Output CSI file")->required();
    estimate->add_option("--root", pilot_root, "Zadoff-Chu pilot root (coprime with bin count)");
    estimate->add_option("--snr", est_snr, "Receiver SNR, dB (absent: noiseless)");
    estimate->add_option("--seed", est_seed, "Noise seed");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Run the stationarity analyses on a capture");
    AnalyzeFlags aflags;
    analyze->add_option("--csi", aflags.csi_path, "CSI capture file");
    analyze->add_option("--traj", aflags.traj_path, "Trajectory log CSV");
    analyze->add_option("--out-dir", aflags.out_dir, "Output directory");
    analyze->add_option("--manifest", aflags.manifest_path,
                        "Replay a stored run manifest (ignores other flags)");
    add_analysis_flags(analyze, aflags);

    // report
    auto* report =
        app.add_subcommand("report", "Synthesize and analyze a batch of scenes, one summary row each");
    std::vector<std::string> scene_list;
    std::string rep_config;
    std::string rep_out;
    double rep_duration = 20.0;
    AnalyzeFlags rflags;
    std::optional<std::uint64_t> rep_seed;
    report->add_option("--scenes", scene_list, "Scene config files")->required()->expected(-1);
    report->add_option("--config", rep_config, "Measurement config file");
    report->add_option("--duration", rep_duration, "Capture duration per scene, seconds");
    report->add_option("--out-dir", rep_out, "Output directory");
    report->add_option("--seed", rep_seed, "Override the scene noise seeds");
    add_analysis_flags(report, rflags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed()) {
            return run_synth(scene_path, config_path, duration, out_path, traj_out, seed_opt,
                             snr_opt);
        }
        if (estimate->parsed()) {
            return run_estimate(est_scene, est_config, est_duration, est_out, pilot_root, est_snr,
                                est_seed);
        }
        if (analyze->parsed()) {
            return run_analyze(aflags);
        }
        if (report->parsed()) {
            return run_report(scene_list, rep_config, rep_duration, rep_out, rflags, rep_seed);
        }
    } catch (const a2g::config_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const a2g::data_error& e) {
        std::fprintf(stderr, "data error: %s\n", e.what());
        return kExitData;
    } catch (const a2g::numeric_error& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
