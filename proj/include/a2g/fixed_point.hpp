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

namespace a2g {

inline constexpr std::int32_t kFixedPointMax = 32767;
inline constexpr std::int32_t kFixedPointMin = -32768;

/// 16-bit fixed-point complex sample as stored on disk; the real value of
/// each component is integer * 2^scale_exponent.
struct FixedPointSample {
    std::int16_t re = 0;
    std::int16_t im = 0;
};
static_assert(sizeof(FixedPointSample) == 4);

/// Smallest exponent e such that max_abs scaled by 2^-e fits in 16 bits.
/// The maximum-magnitude sample then quantizes to at least 14 significant bits.
int choose_scale_exponent(double max_abs);

/// Round to the fixed-point grid. Throws data_error when the scaled value
/// does not fit in a signed 16-bit integer.
std::int16_t quantize(double value, int scale_exponent);

/// Exact inverse of quantize on its image (integer times a power of two).
double dequantize(std::int16_t q, int scale_exponent);

/// One quantization step, 2^scale_exponent.
double quantization_step(int scale_exponent);

}  // namespace a2g
