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

#include <cmath>

#include "a2g/geometry.hpp"
#include "a2g/rng.hpp"

using namespace a2g;

namespace {

UraGeometry default_panel() {
    return UraGeometry::vertical_panel(8, 8, 0.08, Vec3{0.0, 0.0, 11.0}, Vec3{0.0, 1.0, 0.0});
}

}  // namespace

TEST_CASE("element index mappings invert each other") {
    for (const ElementOrder order : {ElementOrder::column_stacked, ElementOrder::row_stacked}) {
        for (std::size_t i = 0; i < 64; ++i) {
            const auto [r, c] = element_grid(i, 8, 8, order);
            CHECK(element_index(r, c, 8, 8, order) == i);
        }
    }
    // column-stacked: +rows steps one column sideways
    const auto [r0, c0] = element_grid(5, 8, 8, ElementOrder::column_stacked);
    const auto [r1, c1] = element_grid(13, 8, 8, ElementOrder::column_stacked);
    CHECK(r0 == r1);
    CHECK(c1 == c0 + 1);
    CHECK_THROWS_AS(element_grid(64, 8, 8, ElementOrder::column_stacked), config_error);
}

TEST_CASE("boresight direction gives equal steering phases") {
    const UraGeometry ura = default_panel();
    const auto v = steering_phase(ura, M_PI / 2.0, 0.0, 0.1149);
    for (const cd& x : v) {
        CHECK(std::abs(x - v[0]) < 1e-12);
    }
}

TEST_CASE("endfire half-wavelength spacing gives a pi phase difference") {
    const double lambda = 0.1149;
    const UraGeometry ura =
        UraGeometry::vertical_panel(1, 2, lambda / 2.0, Vec3{}, Vec3{0.0, 1.0, 0.0});
    // endfire: along the column axis, az = 0
    const auto v = steering_phase(ura, 0.0, 0.0, lambda);
    const double diff = std::arg(v[1] * std::conj(v[0]));
    CHECK(std::abs(std::abs(diff) - M_PI) < 1e-9);
}

TEST_CASE("steering matches per-element path lengths to a far source") {
    const double lambda = kSpeedOfLight / 2.61e9;
    const UraGeometry ura = default_panel();
    // 30 degrees off boresight in azimuth, 10 degrees elevation
    const double az = M_PI / 2.0 - M_PI / 6.0;
    const double el = M_PI / 18.0;
    const auto v = steering_phase(ura, az, el, lambda);

    const double range = 5e5;
    const Vec3 u = ura.direction_from_angles(az, el);
    const Vec3 source = ura.center + u * range;
    const double d0 = norm(source - ura.center);
    for (std::size_t m = 0; m < ura.num_elements(); ++m) {
        const double dm = norm(source - ura.element_position(m));
        // wave from the source arrives earlier at closer elements
        const double expected = 2.0 * M_PI / lambda * (d0 - dm);
        const double got = std::arg(v[m]);
        const double wrapped = std::remainder(expected - got, 2.0 * M_PI);
        CHECK(std::abs(wrapped) < 1e-3);
    }
}

TEST_CASE("steering phasors have unit modulus") {
    const UraGeometry ura = default_panel();
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const double az = rng.next_double() * M_PI;
        const double el = (rng.next_double() - 0.5) * M_PI * 0.9;
        for (const cd& x : steering_phase(ura, az, el, 0.1149)) {
            CHECK(std::abs(std::abs(x) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("angle to bs follows the boresight-90 convention") {
    const Vec3 bs{0.0, 0.0, 11.0};
    const Vec3 dir{1.0, 0.0, 0.0};
    // crossing the boresight
    CHECK(angle_to_bs_deg({0.0, 50.0, 8.0}, bs, dir) == doctest::Approx(90.0).epsilon(1e-12));
    // 50 m before the crossing at 50 m perpendicular distance
    CHECK(angle_to_bs_deg({-50.0, 50.0, 8.0}, bs, dir) == doctest::Approx(45.0).epsilon(1e-12));
    // asymptotes
    CHECK(angle_to_bs_deg({-1e9, 50.0, 8.0}, bs, dir) == doctest::Approx(0.0).epsilon(1e-5));
    CHECK(angle_to_bs_deg({1e9, 50.0, 8.0}, bs, dir) == doctest::Approx(180.0).epsilon(1e-5));
    // degenerate geometry
    CHECK_THROWS_AS(angle_to_bs_deg({0.0, 0.0, 8.0}, bs, dir), numeric_error);
}
