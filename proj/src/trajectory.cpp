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

#include "a2g/trajectory.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace a2g {

Vec3 TrajectoryLog::position_at(double t_s) const {
    if (samples.empty()) {
        throw data_error("trajectory: empty log");
    }
    if (t_s <= samples.front().t_s) {
        return samples.front().position_m;
    }
    if (t_s >= samples.back().t_s) {
        return samples.back().position_m;
    }
    const auto it = std::upper_bound(
        samples.begin(), samples.end(), t_s,
        [](double t, const Sample& s) { return t < s.t_s; });
    const Sample& hi = *it;
    const Sample& lo = *(it - 1);
    const double w = (t_s - lo.t_s) / (hi.t_s - lo.t_s);
    return lo.position_m + (hi.position_m - lo.position_m) * w;
}

void TrajectoryLog::validate() const {
    if (samples.empty()) {
        throw data_error("trajectory: empty log");
    }
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (!(samples[i].t_s > samples[i - 1].t_s)) {
            throw data_error("trajectory: timestamps not strictly increasing at sample " +
                             std::to_string(i));
        }
    }
}

TrajectoryLog TrajectoryLog::load_csv(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw data_error("cannot open trajectory file: " + file.string());
    }
    TrajectoryLog log;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") {
            continue;
        }
        if (lineno == 1 && line.find("timestamp") != std::string::npos) {
            continue;  // header
        }
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        Sample s;
        if (!(row >> s.t_s >> s.position_m.x >> s.position_m.y >> s.position_m.z)) {
            throw data_error(file.string() + ":" + std::to_string(lineno) +
                             ": expected 'timestamp_s,x_m,y_m,z_m'");
        }
        log.samples.push_back(s);
    }
    log.validate();
    return log;
}

void TrajectoryLog::save_csv(const std::filesystem::path& file) const {
    std::ofstream out(file);
    if (!out) {
        throw data_error("cannot write trajectory file: " + file.string());
    }
    out.precision(17);
    out << "timestamp_s,x_m,y_m,z_m\n";
    for (const Sample& s : samples) {
        out << s.t_s << "," << s.position_m.x << "," << s.position_m.y << "," << s.position_m.z
            << "\n";
    }
}

std::vector<Vec3> align_trajectory(const TrajectoryLog& log, const CsiTensor& tensor) {
    log.validate();
    std::vector<Vec3> positions(tensor.num_snapshots());
    std::size_t clamped = 0;
    for (std::size_t t = 0; t < tensor.num_snapshots(); ++t) {
        const double ts = tensor.timestamps_s[t];
        if (ts < log.samples.front().t_s || ts > log.samples.back().t_s) {
            ++clamped;
        }
        positions[t] = log.position_at(ts);
    }
    if (clamped > 0) {
        std::fprintf(stderr,
                     "warning: trajectory log does not span %zu of %zu snapshots; clamped\n",
                     clamped, tensor.num_snapshots());
    }
    return positions;
}

}  // namespace a2g
