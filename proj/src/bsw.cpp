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

#include "risctl/bsw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "risctl/errors.hpp"

namespace risctl {

sweep_sample sweep_observation(std::span<const std::complex<double>> z, const configuration& phi,
                               double rho_u, double sigma_b2, unsigned p, random_stream& rng,
                               bool noisy)
{
    if (p == 0)
        throw config_error("pilot length must be at least 1");
    if (!(rho_u > 0.0) || !(sigma_b2 > 0.0))
        throw config_error("sweep observation needs positive rho_u and sigma_b2");
    sweep_sample s;
    s.y = std::sqrt(rho_u) * combined_channel(phi, z);
    if (noisy)
        s.y += rng.complex_normal(sigma_b2 / double(p));
    s.snr_estimate = std::norm(s.y) / sigma_b2;
    return s;
}

std::optional<std::size_t> select_fixed(std::span<const double> estimates, double gamma0)
{
    std::optional<std::size_t> best;
    for (std::size_t c = 0; c < estimates.size(); ++c) {
        if (estimates[c] < gamma0)
            continue;
        if (!best || estimates[c] > estimates[*best])
            best = c;
    }
    return best;
}

bsw_outcome run_bsw(const channel_realization& channel, const codebook& cb,
                    const radio_params& radio, unsigned p, double gamma0, frame_kind kind,
                    random_stream& rng)
{
    if (cb.n_elements() != channel.z_d.size())
        throw shape_error("codebook and channel disagree on the element count");
    if (!(gamma0 > 0.0) || !std::isfinite(gamma0))
        throw config_error("target SNR must be positive and finite");

    const double rho_u = radio.rho_u();
    const double sigma_b2 = radio.sigma_b2();

    bsw_outcome out;
    out.target_snr = gamma0;
    out.spectral_efficiency = std::log2(1.0 + gamma0);
    out.swept_estimates.reserve(cb.size());
    out.swept_actuals.reserve(cb.size());

    auto observe_next = [&]() {
        const auto& phi = cb[out.swept_estimates.size()];
        const auto s = sweep_observation(channel.z_d, phi, rho_u, sigma_b2, p, rng,
                                         radio.pilot_noise);
        out.swept_estimates.push_back(s.snr_estimate);
        // same operation order as the estimate, so a noiseless sweep reproduces it bit for bit
        out.swept_actuals.push_back(std::norm(std::sqrt(rho_u) * combined_channel(phi, channel.z_d)) /
                                    sigma_b2);
        return s.snr_estimate;
    };

    if (kind == frame_kind::fixed) {
        for (std::size_t c = 0; c < cb.size(); ++c)
            observe_next();
        out.sweep_count = cb.size();
        out.selected_index = select_fixed(out.swept_estimates, gamma0);
    } else {
        const auto sel = select_flexible(observe_next, gamma0, cb.size());
        out.sweep_count = sel.sweep_count;
        out.selected_index = sel.index;
    }

    if (!out.selected_index) {
        out.error_kind = bsw_error::no_config;
    } else {
        out.estimated_snr = out.swept_estimates[*out.selected_index];
        out.actual_snr = out.swept_actuals[*out.selected_index];
        out.error_kind = *out.actual_snr < gamma0 ? bsw_error::overestimation : bsw_error::none;
    }
    out.algorithmic_error = out.error_kind != bsw_error::none;
    return out;
}

double chebyshev_bound(double estimated_snr, double gamma0, unsigned p)
{
    if (p == 0)
        throw config_error("pilot length must be at least 1");
    if (!(estimated_snr > gamma0))
        throw domain_error("overestimation bound needs estimated SNR above the target");
    return std::min(1.0, (1.0 / double(p)) / (estimated_snr - gamma0));
}

} // namespace risctl
