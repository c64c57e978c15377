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

#include <cstdint>
#include <span>
#include <vector>

#include "a2g/geometry.hpp"
#include "a2g/temporal.hpp"

namespace a2g {

/// Normalized element-to-element correlation magnitudes,
/// rho_ij = |R_ij| / sqrt(R_ii * R_jj), with the grid mapping that ties flat
/// element indices to physical (row, col) positions.
struct SpatialCorr {
    std::size_t rows = 0;
    std::size_t cols = 0;
    ElementOrder order = ElementOrder::column_stacked;
    std::vector<double> rho;  // M x M, symmetric, unit diagonal

    std::size_t num_elements() const { return rows * cols; }
    double at(std::size_t i, std::size_t j) const { return rho[i * num_elements() + j]; }
};

/// Throws numeric_error naming the element when a diagonal entry is not
/// positive (dead element).
SpatialCorr spatial_corr(const HermitianMatrix& corr, std::size_t rows, std::size_t cols,
                         ElementOrder order = ElementOrder::column_stacked);

/// One element's correlation row reshaped onto the physical grid, row-major
/// (row, col). The reference cell holds 1.
std::vector<double> element_map(const SpatialCorr& corr, std::size_t ref_row, std::size_t ref_col);

/// Contiguous high-correlation region around a reference element: the
/// 4-connected component of cells with rho > threshold that contains the
/// reference. count excludes the reference itself; the mask includes it.
struct CorrRegion {
    std::size_t count = 0;
    std::vector<std::uint8_t> mask;  // rows x cols, 0/1
};

CorrRegion corr_region(std::span<const double> grid_map, std::size_t rows, std::size_t cols,
                       std::size_t ref_row, std::size_t ref_col, double threshold);

/// Mean of rho over the +/-offset diagonals, mean_i rho(i, i + offset).
double offset_diagonal_score(const SpatialCorr& corr, std::size_t offset);

}  // namespace a2g
