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
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "a2g/tensor.hpp"

namespace a2g {

// Binary CSI capture format, little-endian throughout:
//   magic 'A2GC' | version u32 | rows u32 | cols u32 | bins u32 | scale_exp i32
//   | snapshots u64 | carrier f64 | bandwidth f64 | csi_interval f64
//   | gps_interval f64 | speed f64 | spacing f64 | bs_x f64 | bs_y f64
//   | bs_z f64 | bs_height f64 | timestamps f64[T]
//   | samples (re i16, im i16)[T*M*F] in (t, m, f) order
inline constexpr std::uint32_t kCsiVersion = 1;
inline constexpr std::size_t kCsiFixedHeaderBytes = 112;
inline constexpr std::size_t kCsiBytesPerSample = 4;

inline constexpr std::size_t csi_file_bytes(std::size_t t, std::size_t m, std::size_t f) {
    return kCsiFixedHeaderBytes + 8 * t + kCsiBytesPerSample * t * m * f;
}

/// Serialize with 16-bit fixed-point samples. Without an explicit exponent a
/// per-file scale is chosen so the maximum-magnitude component keeps at least
/// 14 bits; a pinned exponent throws data_error (naming the sample index) when
/// a value does not fit. Returns the byte count written.
std::size_t store_csi(const CsiTensor& tensor, std::ostream& sink,
                      std::optional<int> scale_exponent = std::nullopt);

/// Inverse of store_csi. Throws data_error on bad magic, unsupported version,
/// truncation (naming the missing byte count), or dimension mismatch.
CsiTensor load_csi(std::istream& source);

/// File variants; writes go to a temporary and are renamed into place.
std::size_t store_csi_file(const CsiTensor& tensor, const std::filesystem::path& file,
                           std::optional<int> scale_exponent = std::nullopt);
CsiTensor load_csi_file(const std::filesystem::path& file);

}  // namespace a2g
