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

#include "a2g/fixed_point.hpp"

#include <cmath>
#include <string>

#include "a2g/types.hpp"

namespace a2g {

int choose_scale_exponent(double max_abs) {
    if (!std::isfinite(max_abs)) {
        throw data_error("fixed point: non-finite maximum magnitude");
    }
    if (max_abs <= 0.0) {
        return 0;
    }
    int e = static_cast<int>(std::ceil(std::log2(max_abs / kFixedPointMax)));
    // Fix up against the exact predicate: 2^(e-1) undershoots, 2^e fits.
    while (std::ldexp(max_abs, -e) > static_cast<double>(kFixedPointMax)) {
        ++e;
    }
    while (std::ldexp(max_abs, -(e - 1)) <= static_cast<double>(kFixedPointMax)) {
        --e;
    }
    return e;
}

std::int16_t quantize(double value, int scale_exponent) {
    if (!std::isfinite(value)) {
        throw data_error("fixed point: non-finite value");
    }
    const double scaled = std::ldexp(value, -scale_exponent);
    const long long q = std::llround(scaled);
    if (q > kFixedPointMax || q < kFixedPointMin) {
        throw data_error("fixed point: value " + std::to_string(value) +
                         " out of range at scale exponent " + std::to_string(scale_exponent));
    }
    return static_cast<std::int16_t>(q);
}

double dequantize(std::int16_t q, int scale_exponent) {
    return std::ldexp(static_cast<double>(q), scale_exponent);
}

double quantization_step(int scale_exponent) { return std::ldexp(1.0, scale_exponent); }

}  // namespace a2g
