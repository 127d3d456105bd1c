// SPDX-License-Identifier: Apache-2.0
//
// risctl - control-aware link simulator for RIS-aided uplinks
// Copyright (C) 2026 The risctl authors
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

#ifndef RISCTL_BSW_HPP
#define RISCTL_BSW_HPP

#include <complex>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "risctl/codebook.hpp"
#include "risctl/random.hpp"
#include "risctl/scenario.hpp"

namespace risctl {

enum class frame_kind { fixed, flexible };

enum class bsw_error { none, no_config, overestimation };

struct sweep_sample {
    std::complex<double> y;  // sqrt(rho_u) phi^T z + w, w ~ CN(0, sigma_b2 / p)
    double snr_estimate = 0; // |y|^2 / sigma_b2
};

struct bsw_outcome {
    std::optional<std::size_t> selected_index; // 0-based position in the sweep codebook
    std::size_t sweep_count = 0;               // pilot TTIs spent sweeping
    std::optional<double> estimated_snr;
    std::optional<double> actual_snr;
    double target_snr = 0;
    double spectral_efficiency = 0; // log2(1 + target_snr)
    bool algorithmic_error = false;
    bsw_error error_kind = bsw_error::none;
    // Per swept configuration, in sweep order.
    std::vector<double> swept_estimates;
    std::vector<double> swept_actuals;

    // The selection as 1..C, which is what the flexible-frame TTI count uses.
    std::optional<std::size_t> selected_one_based() const
    {
        if (!selected_index)
            return std::nullopt;
        return *selected_index + 1;
    }
};

// `noisy` = false skips the noise draw (sigma_b2 still normalises the estimate).
sweep_sample sweep_observation(std::span<const std::complex<double>> z, const configuration& phi,
                               double rho_u, double sigma_b2, unsigned p, random_stream& rng,
                               bool noisy = true);

// argmax over {c : estimate_c >= gamma0}, lowest index on ties.
std::optional<std::size_t> select_fixed(std::span<const double> estimates, double gamma0);

struct flexible_selection {
    std::optional<std::size_t> index;
    std::size_t sweep_count = 0;
};

// Pulls estimates one at a time from `next` and stops at the first one >= gamma0.
// Never asks for more than sweep_count values.
template <typename Next>
    requires std::invocable<Next&> && std::convertible_to<std::invoke_result_t<Next&>, double>
flexible_selection select_flexible(Next&& next, double gamma0, std::size_t max_count)
{
    for (std::size_t c = 0; c < max_count; ++c) {
        const double estimate = next();
        if (estimate >= gamma0)
            return {c, c + 1};
    }
    return {std::nullopt, max_count};
}

bsw_outcome run_bsw(const channel_realization& channel, const codebook& cb,
                    const radio_params& radio, unsigned p, double gamma0, frame_kind kind,
                    random_stream& rng);

// min(1, (1/p) / (estimated_snr - gamma0)); needs estimated_snr > gamma0.
double chebyshev_bound(double estimated_snr, double gamma0, unsigned p);

} // namespace risctl

#endif
