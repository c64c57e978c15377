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

#include "a2g/frequency.hpp"

#include <algorithm>
#include <cmath>

namespace a2g {

namespace {

DelayStatsEntry moments(std::span<const double> profile, double delay_step_s, bool signed_axis) {
    const auto bins = static_cast<long>(profile.size());
    double p_total = 0.0;
    double first_moment = 0.0;
    double second_moment = 0.0;
    for (long n = 0; n < bins; ++n) {
        const long idx = (signed_axis && n >= (bins + 1) / 2) ? n - bins : n;
        const double tau = static_cast<double>(idx) * delay_step_s;
        const double p = profile[static_cast<std::size_t>(n)];
        p_total += p;
        first_moment += p * tau;
        second_moment += p * tau * tau;
    }
    if (p_total <= 0.0) {
        throw numeric_error("delay spread: all-zero profile");
    }
    DelayStatsEntry e;
    e.total_power = p_total;
    e.mean_delay_s = first_moment / p_total;
    const double variance = second_moment / p_total - e.mean_delay_s * e.mean_delay_s;
    e.rms_spread_s = std::sqrt(std::max(variance, 0.0));
    return e;
}

}  // namespace

DelayStatsEntry delay_spread(std::span<const double> profile, double delay_step_s) {
    return moments(profile, delay_step_s, false);
}

DelayStatsEntry delay_spread_rereferenced(std::span<const double> profile, double delay_step_s) {
    return moments(profile, delay_step_s, true);
}

FreqCorr freq_corr(const CsiTensor& tensor, std::size_t t_index, std::size_t window) {
    const std::size_t bins = tensor.num_bins();
    const std::size_t antennas = tensor.num_antennas();
    if (window == 0 || t_index + window > tensor.num_snapshots()) {
        throw config_error("freq corr: window overruns the record at t=" +
                           std::to_string(t_index));
    }

    FreqCorr corr;
    corr.num_bins = bins;
    corr.lag_step_hz = tensor.config.bandwidth_hz / static_cast<double>(bins);
    corr.values.assign(2 * bins - 1, cd{});

    std::vector<cd> acc(bins, cd{});
    for (std::size_t k = t_index; k < t_index + window; ++k) {
        for (std::size_t m = 0; m < antennas; ++m) {
            const auto row = tensor.row(k, m);
            for (std::size_t d = 0; d < bins; ++d) {
                cd sum{};
                for (std::size_t f = 0; f + d < bins; ++f) {
                    sum += row[f] * std::conj(row[f + d]);
                }
                acc[d] += sum;
            }
        }
    }
    const double mw = static_cast<double>(antennas) * static_cast<double>(window);
    for (std::size_t d = 0; d < bins; ++d) {
        const cd value = acc[d] / (mw * static_cast<double>(bins - d));
        corr.values[bins - 1 + d] = value;
        corr.values[bins - 1 - d] = std::conj(value);
    }
    return corr;
}

CoherenceResult coherence_bandwidth(const FreqCorr& corr, double bandwidth_hz) {
    const double r0 = corr.zero_lag();
    CoherenceResult result;
    if (r0 <= 0.0) {
        throw numeric_error("coherence bandwidth: zero-lag correlation is not positive");
    }
    const double threshold = 1.0 / M_E;
    const long max_lag = static_cast<long>(corr.num_bins) - 1;

    auto crossing = [&](int sign) -> double {
        double prev = 1.0;
        for (long d = 1; d <= max_lag; ++d) {
            const double ratio = std::abs(corr.at_lag(sign * d)) / r0;
            if (ratio < threshold) {
                const double frac = (prev - threshold) / (prev - ratio);
                return (static_cast<double>(d - 1) + frac) * corr.lag_step_hz;
            }
            prev = ratio;
        }
        return -1.0;  // no crossing within measured lags
    };

    const double pos = crossing(+1);
    const double neg = crossing(-1);
    if (pos < 0.0 || neg < 0.0) {
        result.b_coh_hz = bandwidth_hz;
        result.saturated = true;
    } else {
        result.b_coh_hz = 0.5 * (pos + neg);
    }
    return result;
}

double alpha_factor(double mean_rms_spread_s, double mean_b_coh_hz) {
    if (!(mean_rms_spread_s > 0.0) || !(mean_b_coh_hz > 0.0)) {
        throw numeric_error("alpha factor: both means must be positive");
    }
    return 1.0 / (mean_b_coh_hz * mean_rms_spread_s);
}

}  // namespace a2g
