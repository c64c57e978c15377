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

#include <span>
#include <vector>

#include "a2g/tensor.hpp"

namespace a2g {

/// Delay moments of one averaged power delay profile.
struct DelayStatsEntry {
    double total_power = 0.0;    // P_m
    double mean_delay_s = 0.0;   // T_m
    double rms_spread_s = 0.0;   // S_tau, sqrt(sum P tau^2 / P_m - T_m^2)
};

/// Moments over delay bins tau_n = n * delay_step. The profile is used as
/// given; apply noise clipping beforehand when working on measured data.
/// Throws numeric_error on an all-zero profile.
DelayStatsEntry delay_spread(std::span<const double> profile, double delay_step_s);

/// Same moments for a delay-re-referenced profile (strongest tap at bin 0):
/// bins past the midpoint are the wrapped pre-peak skirt and count as
/// negative delays, so spectral leakage ahead of the first arrival does not
/// masquerade as multi-microsecond dispersion.
DelayStatsEntry delay_spread_rereferenced(std::span<const double> profile, double delay_step_s);

/// Frequency correlation at one reference position, averaged over antennas
/// and a W-snapshot window:
///   R_f(d) = sum over (m, k, f) of H(t_k, m, f) * conj(H(t_k, m, f + d)),
/// each lag divided by its product count M * W * (F - |d|), so the estimate
/// is free of triangular bias. Lags d in (-F, F); R_f(-d) = conj(R_f(d)).
struct FreqCorr {
    std::size_t num_bins = 0;    // F
    double lag_step_hz = 0.0;    // bandwidth / F
    std::vector<cd> values;      // size 2F - 1, lag d at index d + F - 1

    cd at_lag(long lag) const { return values[static_cast<std::size_t>(lag + static_cast<long>(num_bins) - 1)]; }
    double zero_lag() const { return at_lag(0).real(); }
};

FreqCorr freq_corr(const CsiTensor& tensor, std::size_t t_index, std::size_t window);

/// Coherence bandwidth: half the two-sided span between the first crossings
/// of |R_f(d)| / R_f(0) = 1/e on either side of zero lag, with linear
/// interpolation between lag bins. When the ratio never crosses within the
/// measured lags the result saturates to the full bandwidth and is flagged.
struct CoherenceResult {
    double b_coh_hz = 0.0;
    bool saturated = false;
};

CoherenceResult coherence_bandwidth(const FreqCorr& corr, double bandwidth_hz);

/// Scaling factor linking the two frequency-stationarity views,
/// alpha = 1 / (B_coh * S_tau). Throws numeric_error on zero inputs.
double alpha_factor(double mean_rms_spread_s, double mean_b_coh_hz);

}  // namespace a2g
