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

#include "a2g/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace a2g {

std::size_t element_index(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols,
                          ElementOrder order) {
    if (row >= rows || col >= cols) {
        throw config_error("element index (" + std::to_string(row) + ", " + std::to_string(col) +
                           ") outside " + std::to_string(rows) + "x" + std::to_string(cols) +
                           " grid");
    }
    return order == ElementOrder::column_stacked ? col * rows + row : row * cols + col;
}

std::pair<std::size_t, std::size_t> element_grid(std::size_t index, std::size_t rows,
                                                 std::size_t cols, ElementOrder order) {
    if (index >= rows * cols) {
        throw config_error("element index " + std::to_string(index) + " outside grid");
    }
    if (order == ElementOrder::column_stacked) {
        return {index % rows, index / rows};
    }
    return {index / cols, index % cols};
}

UraGeometry UraGeometry::vertical_panel(std::size_t rows, std::size_t cols, double spacing_m,
                                        const Vec3& center, const Vec3& boresight) {
    if (rows == 0 || cols == 0 || spacing_m <= 0.0) {
        throw config_error("array: rows, cols and spacing must be positive");
    }
    const Vec3 n = normalized(horizontal(boresight));
    UraGeometry ura;
    ura.rows = rows;
    ura.cols = cols;
    ura.spacing_m = spacing_m;
    ura.center = center;
    ura.normal = n;
    ura.col_axis = normalized(cross(n, Vec3{0.0, 0.0, 1.0}));
    ura.row_axis = Vec3{0.0, 0.0, 1.0};
    return ura;
}

Vec3 UraGeometry::element_position(std::size_t index, ElementOrder order) const {
    const auto [row, col] = element_grid(index, rows, cols, order);
    const double dc = (static_cast<double>(col) - (static_cast<double>(cols) - 1.0) / 2.0);
    const double dr = (static_cast<double>(row) - (static_cast<double>(rows) - 1.0) / 2.0);
    return center + col_axis * (dc * spacing_m) + row_axis * (dr * spacing_m);
}

Vec3 UraGeometry::direction_from_angles(double az_rad, double el_rad) const {
    const double ch = std::cos(el_rad);
    return col_axis * (ch * std::cos(az_rad)) + normal * (ch * std::sin(az_rad)) +
           row_axis * std::sin(el_rad);
}

std::pair<double, double> UraGeometry::angles_from_direction(const Vec3& u) const {
    const double x = dot(u, col_axis);
    const double y = dot(u, normal);
    const double z = dot(u, row_axis);
    return {std::atan2(y, x), std::asin(std::clamp(z, -1.0, 1.0))};
}

std::vector<cd> steering_phase(const UraGeometry& ura, double az_rad, double el_rad,
                               double wavelength_m, ElementOrder order) {
    if (wavelength_m <= 0.0) {
        throw config_error("steering: wavelength must be positive");
    }
    const Vec3 u = ura.direction_from_angles(az_rad, el_rad);
    const double k = 2.0 * M_PI / wavelength_m;
    std::vector<cd> v(ura.num_elements());
    for (std::size_t m = 0; m < v.size(); ++m) {
        const double phase = k * dot(ura.element_position(m, order) - ura.center, u);
        v[m] = cd(std::cos(phase), std::sin(phase));
    }
    return v;
}

std::vector<cd> steering_toward(const UraGeometry& ura, const Vec3& point, double wavelength_m,
                                ElementOrder order) {
    const auto [az, el] = ura.angles_from_direction(normalized(point - ura.center));
    return steering_phase(ura, az, el, wavelength_m, order);
}

double angle_to_bs_deg(const Vec3& position, const Vec3& bs, const Vec3& travel_direction) {
    const Vec3 to_bs = horizontal(bs - position);
    if (norm(to_bs) == 0.0) {
        throw numeric_error("angle to bs: position coincides with the bs ground projection");
    }
    const Vec3 dir = normalized(horizontal(travel_direction));
    const Vec3 w = normalized(to_bs);
    const double c = dot(dir, w);
    const double s = std::abs(dir.x * w.y - dir.y * w.x);
    return std::atan2(s, c) * 180.0 / M_PI;
}

}  // namespace a2g
