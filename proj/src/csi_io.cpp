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

#include "a2g/csi_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "a2g/fixed_point.hpp"

namespace a2g {

namespace {

constexpr char kMagic[4] = {'A', '2', 'G', 'C'};

static_assert(std::endian::native == std::endian::little,
              "serialization assumes a little-endian host");

class Writer {
  public:
    explicit Writer(std::ostream& out) : out_(out) {}

    void bytes(const void* p, std::size_t n) {
        out_.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
        if (!out_) {
            throw data_error("csi store: sink write failure after " + std::to_string(written_) +
                             " bytes");
        }
        written_ += n;
    }

    template <typename T>
    void value(T v) {
        bytes(&v, sizeof(T));
    }

    std::size_t written() const { return written_; }

  private:
    std::ostream& out_;
    std::size_t written_ = 0;
};

class Reader {
  public:
    explicit Reader(std::istream& in) : in_(in) {}

    void bytes(void* p, std::size_t n) {
        in_.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
        const auto got = static_cast<std::size_t>(in_.gcount());
        if (got != n) {
            throw data_error("csi load: truncated stream, " + std::to_string(n - got) +
                             " of " + std::to_string(n) + " bytes missing at offset " +
                             std::to_string(offset_ + got));
        }
        offset_ += n;
    }

    template <typename T>
    T value() {
        T v;
        bytes(&v, sizeof(T));
        return v;
    }

  private:
    std::istream& in_;
    std::size_t offset_ = 0;
};

}  // namespace

std::size_t store_csi(const CsiTensor& tensor, std::ostream& sink,
                      std::optional<int> scale_exponent) {
    tensor.validate();

    int exponent;
    if (scale_exponent) {
        exponent = *scale_exponent;
    } else {
        double max_abs = 0.0;
        for (const cd& v : tensor.data) {
            max_abs = std::max({max_abs, std::abs(v.real()), std::abs(v.imag())});
        }
        exponent = choose_scale_exponent(max_abs);
    }

    const MeasurementConfig& c = tensor.config;
    Writer w(sink);
    w.bytes(kMagic, sizeof(kMagic));
    w.value<std::uint32_t>(kCsiVersion);
    w.value<std::uint32_t>(static_cast<std::uint32_t>(c.array_rows));
    w.value<std::uint32_t>(static_cast<std::uint32_t>(c.array_cols));
    w.value<std::uint32_t>(static_cast<std::uint32_t>(c.num_freq_bins));
    w.value<std::int32_t>(static_cast<std::int32_t>(exponent));
    w.value<std::uint64_t>(static_cast<std::uint64_t>(tensor.num_snapshots()));
    w.value<double>(c.center_frequency_hz);
    w.value<double>(c.bandwidth_hz);
    w.value<double>(c.csi_interval_s);
    w.value<double>(c.gps_interval_s);
    w.value<double>(c.speed_mps);
    w.value<double>(c.element_spacing_m);
    w.value<double>(c.bs_position_m.x);
    w.value<double>(c.bs_position_m.y);
    w.value<double>(c.bs_position_m.z);
    w.value<double>(c.bs_height_m);
    for (double ts : tensor.timestamps_s) {
        w.value<double>(ts);
    }

    std::vector<FixedPointSample> line(tensor.num_bins());
    for (std::size_t t = 0; t < tensor.num_snapshots(); ++t) {
        for (std::size_t m = 0; m < tensor.num_antennas(); ++m) {
            const auto row = tensor.row(t, m);
            for (std::size_t f = 0; f < row.size(); ++f) {
                try {
                    line[f] = {quantize(row[f].real(), exponent),
                               quantize(row[f].imag(), exponent)};
                } catch (const data_error& e) {
                    throw data_error(std::string(e.what()) + " (sample t=" + std::to_string(t) +
                                     " m=" + std::to_string(m) + " f=" + std::to_string(f) + ")");
                }
            }
            w.bytes(line.data(), line.size() * sizeof(FixedPointSample));
        }
    }
    return w.written();
}

CsiTensor load_csi(std::istream& source) {
    Reader r(source);

    char magic[4];
    r.bytes(magic, sizeof(magic));
    if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw data_error("csi load: bad magic, not a CSI capture file");
    }
    const auto version = r.value<std::uint32_t>();
    if (version != kCsiVersion) {
        throw data_error("csi load: unsupported version " + std::to_string(version) +
                         ", expected " + std::to_string(kCsiVersion));
    }

    CsiTensor tensor;
    MeasurementConfig& c = tensor.config;
    c.array_rows = r.value<std::uint32_t>();
    c.array_cols = r.value<std::uint32_t>();
    c.num_freq_bins = r.value<std::uint32_t>();
    const auto exponent = static_cast<int>(r.value<std::int32_t>());
    const auto snapshots = static_cast<std::size_t>(r.value<std::uint64_t>());
    c.center_frequency_hz = r.value<double>();
    c.bandwidth_hz = r.value<double>();
    c.csi_interval_s = r.value<double>();
    c.gps_interval_s = r.value<double>();
    c.speed_mps = r.value<double>();
    c.element_spacing_m = r.value<double>();
    c.bs_position_m.x = r.value<double>();
    c.bs_position_m.y = r.value<double>();
    c.bs_position_m.z = r.value<double>();
    c.bs_height_m = r.value<double>();
    c.validate();

    tensor.timestamps_s.resize(snapshots);
    for (std::size_t t = 0; t < snapshots; ++t) {
        tensor.timestamps_s[t] = r.value<double>();
    }

    const std::size_t count = snapshots * c.num_antennas() * c.num_freq_bins;
    tensor.data.resize(count);
    std::vector<FixedPointSample> line(c.num_freq_bins);
    std::size_t flat = 0;
    for (std::size_t t = 0; t < snapshots; ++t) {
        for (std::size_t m = 0; m < c.num_antennas(); ++m) {
            r.bytes(line.data(), line.size() * sizeof(FixedPointSample));
            for (std::size_t f = 0; f < c.num_freq_bins; ++f) {
                tensor.data[flat++] =
                    cd(dequantize(line[f].re, exponent), dequantize(line[f].im, exponent));
            }
        }
    }
    tensor.validate();
    return tensor;
}

std::size_t store_csi_file(const CsiTensor& tensor, const std::filesystem::path& file,
                           std::optional<int> scale_exponent) {
    const std::filesystem::path tmp = file.string() + ".tmp";
    std::size_t n;
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw data_error("cannot open for writing: " + tmp.string());
        }
        n = store_csi(tensor, out, scale_exponent);
    }
    std::filesystem::rename(tmp, file);
    return n;
}

CsiTensor load_csi_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw data_error("cannot open CSI file: " + file.string());
    }
    return load_csi(in);
}

}  // namespace a2g
