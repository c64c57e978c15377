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

#include "a2g/manifest.hpp"

#include <fstream>

#include "a2g/keyvalue.hpp"

namespace a2g {

void AnalysisParams::validate() const {
    if (window == 0) {
        throw config_error("analysis: window must be positive");
    }
    if (!(c_th > 0.0 && c_th < 1.0)) {
        throw config_error("analysis: c_th must be in (0, 1)");
    }
    if (stride == 0) {
        throw config_error("analysis: stride must be positive");
    }
    if (!(angle_step_deg > 0.0) || !(angle_max_deg > angle_min_deg)) {
        throw config_error("analysis: bad angle grid");
    }
    if (!(clip_db > 0.0)) {
        throw config_error("analysis: clip_db must be positive");
    }
    if (pdp_pad == 0) {
        throw config_error("analysis: pdp_pad must be positive");
    }
    for (double th : {rho_threshold_hi, rho_threshold_lo}) {
        if (!(th > 0.0 && th < 1.0)) {
            throw config_error("analysis: rho thresholds must be in (0, 1)");
        }
    }
}

CmdMapParams AnalysisParams::map_params() const {
    CmdMapParams p;
    p.window = window;
    p.band_begin = band_begin;
    p.band_end = band_end;
    p.stride = stride;
    p.angle_min_deg = angle_min_deg;
    p.angle_max_deg = angle_max_deg;
    p.angle_step_deg = angle_step_deg;
    return p;
}

RunManifest RunManifest::load(const std::filesystem::path& file) {
    const KeyValueFile kv = KeyValueFile::parse(file);
    RunManifest m;
    m.csi_path = kv.get_string("csi_path");
    m.trajectory_path = kv.get_string("trajectory_path");
    m.out_dir = kv.get_string("out_dir");
    AnalysisParams& p = m.params;
    p.window = static_cast<std::size_t>(kv.get_int("window"));
    p.c_th = kv.get_double("c_th");
    p.band_begin = static_cast<std::size_t>(kv.get_int("band_begin"));
    p.band_end = static_cast<std::size_t>(kv.get_int("band_end"));
    p.stride = static_cast<std::size_t>(kv.get_int("stride"));
    p.angle_min_deg = kv.get_double("angle_min_deg");
    p.angle_max_deg = kv.get_double("angle_max_deg");
    p.angle_step_deg = kv.get_double("angle_step_deg");
    p.clip_db = kv.get_double("clip_db");
    p.pdp_pad = static_cast<std::size_t>(kv.get_int_or("pdp_pad", 1));
    p.rho_threshold_hi = kv.get_double("rho_threshold_hi");
    p.rho_threshold_lo = kv.get_double("rho_threshold_lo");
    p.spatial_ref_row = static_cast<std::size_t>(kv.get_int("spatial_ref_row"));
    p.spatial_ref_col = static_cast<std::size_t>(kv.get_int("spatial_ref_col"));
    p.spatial_angle_deg = kv.get_double("spatial_angle_deg");
    p.element_order = kv.get_string("element_order") == "row_stacked"
                          ? ElementOrder::row_stacked
                          : ElementOrder::column_stacked;
    p.label = kv.get_string("label");
    p.validate();
    return m;
}

void RunManifest::save(const std::filesystem::path& file) const {
    const std::filesystem::path tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) {
            throw data_error("cannot write manifest: " + tmp.string());
        }
        out.precision(17);
        out << "csi_path = " << csi_path << "\n"
            << "trajectory_path = " << trajectory_path << "\n"
            << "out_dir = " << out_dir << "\n"
            << "window = " << params.window << "\n"
            << "c_th = " << params.c_th << "\n"
            << "band_begin = " << params.band_begin << "\n"
            << "band_end = " << params.band_end << "\n"
            << "stride = " << params.stride << "\n"
            << "angle_min_deg = " << params.angle_min_deg << "\n"
            << "angle_max_deg = " << params.angle_max_deg << "\n"
            << "angle_step_deg = " << params.angle_step_deg << "\n"
            << "clip_db = " << params.clip_db << "\n"
            << "pdp_pad = " << params.pdp_pad << "\n"
            << "rho_threshold_hi = " << params.rho_threshold_hi << "\n"
            << "rho_threshold_lo = " << params.rho_threshold_lo << "\n"
            << "spatial_ref_row = " << params.spatial_ref_row << "\n"
            << "spatial_ref_col = " << params.spatial_ref_col << "\n"
            << "spatial_angle_deg = " << params.spatial_angle_deg << "\n"
            << "element_order = "
            << (params.element_order == ElementOrder::row_stacked ? "row_stacked"
                                                                  : "column_stacked")
            << "\n"
            << "label = " << params.label << "\n";
    }
    std::filesystem::rename(tmp, file);
}

}  // namespace a2g
