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

#include "a2g/spatial.hpp"

#include <cmath>
#include <deque>
#include <utility>

namespace a2g {

SpatialCorr spatial_corr(const HermitianMatrix& corr, std::size_t rows, std::size_t cols,
                         ElementOrder order) {
    const std::size_t n = corr.n;
    if (n != rows * cols) {
        throw data_error("spatial corr: matrix size does not match the grid");
    }
    std::vector<double> scale(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = corr.at(i, i).real();
        if (!(d > 0.0)) {
            throw numeric_error("spatial corr: non-positive diagonal at element " +
                                std::to_string(i) + " (dead element)");
        }
        scale[i] = std::sqrt(d);
    }
    SpatialCorr out;
    out.rows = rows;
    out.cols = cols;
    out.order = order;
    out.rho.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        out.rho[i * n + i] = 1.0;
        for (std::size_t j = 0; j < i; ++j) {
            const double r = std::abs(corr.at(i, j)) / (scale[i] * scale[j]);
            out.rho[i * n + j] = r;
            out.rho[j * n + i] = r;
        }
    }
    return out;
}

std::vector<double> element_map(const SpatialCorr& corr, std::size_t ref_row,
                                std::size_t ref_col) {
    const std::size_t ref = element_index(ref_row, ref_col, corr.rows, corr.cols, corr.order);
    std::vector<double> grid(corr.num_elements());
    for (std::size_t r = 0; r < corr.rows; ++r) {
        for (std::size_t c = 0; c < corr.cols; ++c) {
            grid[r * corr.cols + c] = corr.at(ref, element_index(r, c, corr.rows, corr.cols,
                                                                 corr.order));
        }
    }
    return grid;
}

CorrRegion corr_region(std::span<const double> grid_map, std::size_t rows, std::size_t cols,
                       std::size_t ref_row, std::size_t ref_col, double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw config_error("corr region: threshold must be in (0, 1)");
    }
    if (grid_map.size() != rows * cols || ref_row >= rows || ref_col >= cols) {
        throw config_error("corr region: reference outside the grid");
    }
    CorrRegion region;
    region.mask.assign(rows * cols, 0);
    std::deque<std::pair<std::size_t, std::size_t>> queue;
    region.mask[ref_row * cols + ref_col] = 1;
    queue.emplace_back(ref_row, ref_col);
    while (!queue.empty()) {
        const auto [r, c] = queue.front();
        queue.pop_front();
        const long dr[] = {1, -1, 0, 0};
        const long dc[] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            const long nr = static_cast<long>(r) + dr[k];
            const long nc = static_cast<long>(c) + dc[k];
            if (nr < 0 || nc < 0 || nr >= static_cast<long>(rows) || nc >= static_cast<long>(cols)) {
                continue;
            }
            const std::size_t idx = static_cast<std::size_t>(nr) * cols + static_cast<std::size_t>(nc);
            if (region.mask[idx] == 0 && grid_map[idx] > threshold) {
                region.mask[idx] = 1;
                ++region.count;
                queue.emplace_back(static_cast<std::size_t>(nr), static_cast<std::size_t>(nc));
            }
        }
    }
    return region;
}

double offset_diagonal_score(const SpatialCorr& corr, std::size_t offset) {
    const std::size_t n = corr.num_elements();
    if (offset == 0 || offset >= n) {
        throw config_error("offset diagonal: offset must be in (0, M)");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i + offset < n; ++i) {
        sum += corr.at(i, i + offset);
    }
    return sum / static_cast<double>(n - offset);
}

}  // namespace a2g
