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

#include "a2g/sounder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "a2g/rng.hpp"
#include "a2g/synth.hpp"

namespace a2g {

PilotSequence zadoff_chu(std::uint32_t root, std::uint32_t length) {
    if (length == 0 || root == 0 || root >= length) {
        throw config_error("zadoff-chu: need 0 < root < length");
    }
    if (std::gcd(root, length) != 1) {
        throw config_error("zadoff-chu: root " + std::to_string(root) +
                           " not coprime with length " + std::to_string(length));
    }
    PilotSequence seq;
    seq.root = root;
    seq.samples.resize(length);
    const double n = static_cast<double>(length);
    for (std::uint32_t k = 0; k < length; ++k) {
        const double kk = static_cast<double>(k);
        const double arg = (length % 2 == 1) ? kk * (kk + 1.0) : kk * kk;
        const double phase = -M_PI * static_cast<double>(root) * arg / n;
        seq.samples[k] = cd(std::cos(phase), std::sin(phase));
    }
    return seq;
}

SyncResult pss_detect(std::span<const cd> received, const PilotSequence& reference,
                      double threshold) {
    const std::size_t ref_len = reference.length();
    if (ref_len == 0 || received.size() < ref_len) {
        throw data_error("pss detect: received shorter than the reference");
    }

    double ref_energy = 0.0;
    for (const cd& v : reference.samples) {
        ref_energy += std::norm(v);
    }
    const double ref_norm = std::sqrt(ref_energy);

    SyncResult best;
    best.threshold = threshold;
    double window_energy = 0.0;
    for (std::size_t k = 0; k < ref_len; ++k) {
        window_energy += std::norm(received[k]);
    }
    for (std::size_t off = 0; off + ref_len <= received.size(); ++off) {
        if (window_energy > 0.0) {
            cd acc{};
            for (std::size_t k = 0; k < ref_len; ++k) {
                acc += std::conj(reference.samples[k]) * received[off + k];
            }
            const double metric = std::abs(acc) / (ref_norm * std::sqrt(window_energy));
            if (metric > best.peak_metric) {
                best.peak_metric = metric;
                best.offset = off;
            }
        }
        if (off + ref_len < received.size()) {
            window_energy += std::norm(received[off + ref_len]) - std::norm(received[off]);
            window_energy = std::max(window_energy, 0.0);
        }
    }
    best.detected = best.peak_metric >= threshold;
    return best;
}

std::vector<cd> ls_estimate(std::span<const cd> rx_pilot, std::span<const cd> tx_pilot,
                            std::size_t num_antennas) {
    const std::size_t bins = tx_pilot.size();
    if (rx_pilot.size() != num_antennas * bins) {
        throw data_error("ls estimate: rx size does not match antennas x bins");
    }
    for (std::size_t f = 0; f < bins; ++f) {
        if (std::abs(tx_pilot[f]) == 0.0) {
            throw numeric_error("ls estimate: zero pilot at bin " + std::to_string(f));
        }
    }
    std::vector<cd> est(rx_pilot.size());
    for (std::size_t m = 0; m < num_antennas; ++m) {
        for (std::size_t f = 0; f < bins; ++f) {
            est[m * bins + f] = rx_pilot[m * bins + f] / tx_pilot[f];
        }
    }
    return est;
}

double nmse_db(const CsiTensor& estimate, const CsiTensor& truth) {
    if (estimate.data.size() != truth.data.size()) {
        throw data_error("nmse: tensors differ in size");
    }
    double err = 0.0;
    double ref = 0.0;
    for (std::size_t i = 0; i < truth.data.size(); ++i) {
        err += std::norm(estimate.data[i] - truth.data[i]);
        ref += std::norm(truth.data[i]);
    }
    if (ref == 0.0) {
        throw numeric_error("nmse: reference tensor has zero energy");
    }
    return 10.0 * std::log10(err / ref);
}

EstimateResult estimate_csi(const Scene& scene, const MeasurementConfig& config,
                            double duration_s, std::uint32_t pilot_root,
                            std::optional<double> snr_db, std::uint64_t seed) {
    Scene clean = scene;
    clean.noise_snr_db.reset();  // receiver noise is added to the pilot pass
    const CsiTensor truth = synth_csi(clean, config, duration_s);

    const PilotSequence pilot =
        zadoff_chu(pilot_root, static_cast<std::uint32_t>(config.num_freq_bins));

    double noise_scale = 0.0;
    if (snr_db) {
        double power = 0.0;
        for (const cd& v : truth.data) {
            power += std::norm(v);
        }
        power /= static_cast<double>(truth.data.size());
        noise_scale = std::sqrt(power * std::pow(10.0, -*snr_db / 10.0));
    }

    CsiTensor estimated = truth;  // layout + timestamps; data overwritten below
    const std::size_t num_antennas = config.num_antennas();
    const std::size_t bins = config.num_freq_bins;
    const std::size_t stride = num_antennas * bins;

#pragma omp parallel for schedule(static)
    for (long long t = 0; t < static_cast<long long>(truth.num_snapshots()); ++t) {
        const auto ts = static_cast<std::size_t>(t);
        std::vector<cd> rx(stride);
        Rng rng = Rng::substream(seed, ts);
        for (std::size_t m = 0; m < num_antennas; ++m) {
            for (std::size_t f = 0; f < bins; ++f) {
                cd v = truth.at(ts, m, f) * pilot.samples[f];
                if (noise_scale > 0.0) {
                    v += noise_scale * rng.next_complex_gaussian();
                }
                rx[m * bins + f] = v;
            }
        }
        const auto est = ls_estimate(rx, pilot.samples, num_antennas);
        std::copy(est.begin(), est.end(), estimated.data.begin() + ts * stride);
    }

    EstimateResult result{std::move(estimated), 0.0};
    result.nmse_db = nmse_db(result.estimated, truth);
    return result;
}

}  // namespace a2g
