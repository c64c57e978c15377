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

#include <cstddef>
#include <utility>
#include <vector>

#include "a2g/types.hpp"

namespace a2g {

/// Mapping between flat element index and (row, col) on the physical grid.
/// column_stacked: index = col * rows + row, so index +/- rows steps one
/// column sideways. row_stacked is the transpose convention.
enum class ElementOrder { column_stacked, row_stacked };

std::size_t element_index(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols,
                          ElementOrder order);
/// Inverse of element_index; returns {row, col}.
std::pair<std::size_t, std::size_t> element_grid(std::size_t index, std::size_t rows,
                                                 std::size_t cols, ElementOrder order);

/// Uniform rectangular array in a vertical plane. Columns run along the
/// horizontal in-plane axis, rows along the in-plane vertical axis; the
/// boresight normal is horizontal.
struct UraGeometry {
    std::size_t rows = 8;
    std::size_t cols = 8;
    double spacing_m = 0.08;
    Vec3 center;       // array reference point
    Vec3 normal;       // boresight, unit, horizontal
    Vec3 col_axis;     // unit, horizontal, in-plane
    Vec3 row_axis;     // unit, vertical, in-plane

    static UraGeometry vertical_panel(std::size_t rows, std::size_t cols, double spacing_m,
                                      const Vec3& center, const Vec3& boresight);

    std::size_t num_elements() const { return rows * cols; }

    Vec3 element_position(std::size_t index, ElementOrder order = ElementOrder::column_stacked) const;

    /// az is measured in the horizontal plane from col_axis toward the
    /// boresight normal (boresight itself sits at az = pi/2), el from the
    /// horizontal plane upward.
    Vec3 direction_from_angles(double az_rad, double el_rad) const;
    /// Inverse; returns {az_rad, el_rad} of a unit direction.
    std::pair<double, double> angles_from_direction(const Vec3& u) const;
};

/// Far-field array response for a source in direction (az, el): element m gets
/// phase 2*pi/lambda * (p_m - center) . u, returned as unit-modulus phasors.
std::vector<cd> steering_phase(const UraGeometry& ura, double az_rad, double el_rad,
                               double wavelength_m, ElementOrder order = ElementOrder::column_stacked);

/// Same response for the direction from the array center toward `point`.
std::vector<cd> steering_toward(const UraGeometry& ura, const Vec3& point, double wavelength_m,
                                ElementOrder order = ElementOrder::column_stacked);

/// Travel angle to the base station: the planar angle between the horizontal
/// travel direction and the horizontal vector from `position` to `bs`.
/// Crossing the boresight of a parallel pass gives 90 deg; far before the
/// crossing the angle tends to 0, far after to 180. Throws numeric_error when
/// position and bs coincide horizontally.
double angle_to_bs_deg(const Vec3& position, const Vec3& bs, const Vec3& travel_direction);

}  // namespace a2g
