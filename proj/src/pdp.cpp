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

#include "a2g/pdp.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <unordered_map>

namespace a2g {

namespace {

// FFTW plan creation is not thread-safe; execution via fftw_execute_dft on
// distinct buffers is. Plans use FFTW_ESTIMATE so the algorithm choice, and
// with it the exact rounding, is reproducible run to run.
class PlanCache {
  public:
    static fftw_plan backward(std::size_t n) {
        static PlanCache cache;
        std::lock_guard<std::mutex> lock(cache.mutex_);
        auto it = cache.plans_.find(n);
        if (it != cache.plans_.end()) {
            return it->second;
        }
        std::vector<cd> in(n);
        std::vector<cd> out(n);
        fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n),
                                          reinterpret_cast<fftw_complex*>(in.data()),
                                          reinterpret_cast<fftw_complex*>(out.data()),
                                          FFTW_BACKWARD, FFTW_ESTIMATE);
        cache.plans_.emplace(n, plan);
        return plan;
    }

  private:
    std::mutex mutex_;
    std::unordered_map<std::size_t, fftw_plan> plans_;
};

}  // namespace

void impulse_response_row(std::span<const cd> freq_row, std::span<cd> delay_row) {
    const std::size_t n = freq_row.size();
    const fftw_plan plan = PlanCache::backward(n);
    std::vector<cd> in(freq_row.begin(), freq_row.end());
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(delay_row.data()));
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (cd& v : delay_row) {
        v *= scale;
    }
}

std::vector<cd> impulse_response(const CsiTensor& tensor) {
    const std::size_t bins = tensor.num_bins();
    const std::size_t rows = tensor.num_snapshots() * tensor.num_antennas();
    std::vector<cd> impulse(rows * bins);
    PlanCache::backward(bins);  // create before the parallel region

#pragma omp parallel for schedule(static)
    for (long long r = 0; r < static_cast<long long>(rows); ++r) {
        const auto row = static_cast<std::size_t>(r);
        impulse_response_row({tensor.data.data() + row * bins, bins},
                             {impulse.data() + row * bins, bins});
    }
    return impulse;
}

std::vector<double> instantaneous_pdp(std::span<const cd> impulse) {
    std::vector<double> power(impulse.size());
    for (std::size_t i = 0; i < impulse.size(); ++i) {
        power[i] = std::norm(impulse[i]);
    }
    return power;
}

PdpSeries averaged_pdp_from_power(std::span<const double> power, std::size_t snapshots,
                                  std::size_t antennas, std::size_t bins, std::size_t window,
                                  std::span<const double> timestamps, double delay_step_s) {
    if (window == 0 || window > snapshots) {
        throw config_error("averaged pdp: window must be in [1, T]");
    }
    if (power.size() != snapshots * antennas * bins) {
        throw data_error("averaged pdp: power layout does not match dimensions");
    }
    PdpSeries series;
    series.window = window;
    series.num_delay_bins = bins;
    series.delay_step_s = delay_step_s;
    const std::size_t rows = snapshots - window + 1;
    series.times_s.assign(timestamps.begin(), timestamps.begin() + static_cast<long>(rows));
    series.averaged.assign(rows * bins, 0.0);
    const double scale = 1.0 / (static_cast<double>(antennas) * static_cast<double>(window));

#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(rows); ++i) {
        double* out = series.averaged.data() + static_cast<std::size_t>(i) * bins;
        for (std::size_t k = static_cast<std::size_t>(i); k < static_cast<std::size_t>(i) + window;
             ++k) {
            for (std::size_t m = 0; m < antennas; ++m) {
                const double* p = power.data() + (k * antennas + m) * bins;
                for (std::size_t f = 0; f < bins; ++f) {
                    out[f] += p[f];
                }
            }
        }
        for (std::size_t f = 0; f < bins; ++f) {
            out[f] *= scale;
        }
    }
    return series;
}

PdpSeries averaged_pdp(const CsiTensor& tensor, std::size_t window, std::size_t pad_factor) {
    const std::size_t snapshots = tensor.num_snapshots();
    const std::size_t antennas = tensor.num_antennas();
    if (window == 0 || window > snapshots) {
        throw config_error("averaged pdp: window must be in [1, T]");
    }
    if (pad_factor == 0) {
        throw config_error("averaged pdp: pad factor must be positive");
    }
    const std::size_t bins = tensor.num_bins() * pad_factor;

    // Antenna-summed tap powers per snapshot, then the window average. Keeps
    // memory at T*F doubles instead of the full impulse response.
    std::vector<double> snap_power(snapshots * bins, 0.0);
    PlanCache::backward(bins);

#pragma omp parallel
    {
        std::vector<cd> padded(bins, cd{});
        std::vector<cd> delay_row(bins);
#pragma omp for schedule(static)
        for (long long t = 0; t < static_cast<long long>(snapshots); ++t) {
            const auto ts = static_cast<std::size_t>(t);
            double* q = snap_power.data() + ts * bins;
            for (std::size_t m = 0; m < antennas; ++m) {
                const auto row = tensor.row(ts, m);
                if (pad_factor == 1) {
                    impulse_response_row(row, delay_row);
                } else {
                    std::copy(row.begin(), row.end(), padded.begin());
                    impulse_response_row(padded, delay_row);
                }
                for (std::size_t f = 0; f < bins; ++f) {
                    q[f] += std::norm(delay_row[f]);
                }
            }
        }
    }

    PdpSeries series;
    series.window = window;
    series.num_delay_bins = bins;
    series.delay_step_s = tensor.config.delay_step_s() / static_cast<double>(pad_factor);
    const std::size_t rows = snapshots - window + 1;
    series.times_s.assign(tensor.timestamps_s.begin(),
                          tensor.timestamps_s.begin() + static_cast<long>(rows));
    series.averaged.assign(rows * bins, 0.0);
    const double scale = 1.0 / (static_cast<double>(antennas) * static_cast<double>(window));

#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(rows); ++i) {
        double* out = series.averaged.data() + static_cast<std::size_t>(i) * bins;
        for (std::size_t k = static_cast<std::size_t>(i); k < static_cast<std::size_t>(i) + window;
             ++k) {
            const double* q = snap_power.data() + k * bins;
            for (std::size_t f = 0; f < bins; ++f) {
                out[f] += q[f];
            }
        }
        for (std::size_t f = 0; f < bins; ++f) {
            out[f] *= scale;
        }
    }
    return series;
}

std::size_t rereference_delays(PdpSeries& series) {
    const std::size_t bins = series.num_delay_bins;
    std::size_t best_bin = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < series.rows(); ++i) {
        const auto p = series.profile(i);
        for (std::size_t f = 0; f < bins; ++f) {
            if (p[f] > best) {
                best = p[f];
                best_bin = f;
            }
        }
    }
    if (best_bin != 0) {
        std::vector<double> tmp(bins);
        for (std::size_t i = 0; i < series.rows(); ++i) {
            auto p = series.profile(i);
            for (std::size_t f = 0; f < bins; ++f) {
                tmp[f] = p[(f + best_bin) % bins];
            }
            std::copy(tmp.begin(), tmp.end(), p.begin());
        }
    }
    series.reference_bin = best_bin;
    return best_bin;
}

void clip_noise_floor(PdpSeries& series, double clip_db) {
    const double ratio = std::pow(10.0, -clip_db / 10.0);
    for (std::size_t i = 0; i < series.rows(); ++i) {
        auto p = series.profile(i);
        const double peak = *std::max_element(p.begin(), p.end());
        const double floor = peak * ratio;
        for (double& v : p) {
            if (v < floor) {
                v = 0.0;
            }
        }
    }
}

std::vector<double> received_power(const PdpSeries& series, PowerMode mode) {
    std::vector<double> out(series.rows());
    for (std::size_t i = 0; i < series.rows(); ++i) {
        const auto p = series.profile(i);
        if (mode == PowerMode::total) {
            double sum = 0.0;
            for (double v : p) {
                sum += v;
            }
            out[i] = sum;
        } else {
            out[i] = p[0];
        }
    }
    return out;
}

std::vector<double> to_db_normalized(std::span<const double> values) {
    const double peak = values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
    if (peak <= 0.0) {
        throw numeric_error("db normalization: all values are zero");
    }
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        // Zero taps map to a finite floor so exported CSVs stay plottable.
        out[i] = values[i] > 0.0 ? 10.0 * std::log10(values[i] / peak) : -400.0;
    }
    return out;
}

}  // namespace a2g
