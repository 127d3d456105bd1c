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

#include "risctl/oce.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "risctl/errors.hpp"
#include "risctl/units.hpp"

namespace risctl {

ae_mode ae_mode::parse(const std::string& text)
{
    if (text == "strict")
        return {kind::strict, 0.0};
    if (text == "negligible")
        return {kind::negligible, 0.0};
    const std::string prefix = "margin:";
    if (text.rfind(prefix, 0) == 0) {
        const std::string number = text.substr(prefix.size());
        double db = 0.0;
        const auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), db);
        if (ec != std::errc{} || ptr != number.data() + number.size() || !std::isfinite(db))
            throw config_error("ae_mode margin must be a finite number of dB, got '" + number +
                               "'");
        return {kind::margin, db};
    }
    throw config_error("ae_mode must be strict, negligible or margin:<dB>, got '" + text + "'");
}

std::string ae_mode::to_string() const
{
    switch (mode) {
    case kind::strict:
        return "strict";
    case kind::negligible:
        return "negligible";
    case kind::margin: {
        char buf[64];
        std::snprintf(buf, sizeof buf, "margin:%g", margin_db);
        return buf;
    }
    }
    return "?";
}

bool ae_mode::is_error(double estimated_snr, double actual_snr) const
{
    switch (mode) {
    case kind::strict:
        // rounding in the estimate chain is not an overestimate
        return estimated_snr > actual_snr * (1.0 + 1e-9);
    case kind::negligible:
        return false;
    case kind::margin:
        return estimated_snr > actual_snr * db_to_linear(margin_db);
    }
    return false;
}

std::complex<double> pilot_observation(std::span<const std::complex<double>> z,
                                       const configuration& phi, double rho_u, double sigma_b2,
                                       unsigned p, random_stream& rng)
{
    if (p == 0)
        throw config_error("pilot length must be at least 1");
    if (!(rho_u > 0.0) || sigma_b2 < 0.0)
        throw config_error("pilot observation needs rho_u > 0 and sigma_b2 >= 0");
    const auto clean = combined_channel(phi, z);
    if (sigma_b2 == 0.0)
        return clean;
    return clean + rng.complex_normal(sigma_b2 / (double(p) * rho_u));
}

cvec ls_estimate(std::span<const std::complex<double>> observations, const codebook& theta)
{
    const std::size_t card = theta.size();
    if (observations.size() != card)
        throw shape_error("ls_estimate: " + std::to_string(observations.size()) +
                          " observations for a codebook of " + std::to_string(card));
    if (theta.gram_deviation() > 1e-9 * double(card))
        throw estimation_error("codebook is not orthogonal (Theta^* Theta^T != C I)");

    cvec z_hat(theta.n_elements(), {0.0, 0.0});
    for (std::size_t c = 0; c < card; ++c) {
        const auto& phi = theta[c];
        const auto y = observations[c];
        for (std::size_t n = 0; n < z_hat.size(); ++n)
            z_hat[n] += std::conj(phi[n]) * y;
    }
    for (auto& v : z_hat)
        v /= double(card);
    return z_hat;
}

configuration optimal_config(std::span<const std::complex<double>> z_hat)
{
    cvec phases(z_hat.size());
    for (std::size_t n = 0; n < z_hat.size(); ++n) {
        const double mag = std::abs(z_hat[n]);
        phases[n] = mag > 0.0 ? std::conj(z_hat[n]) / mag : std::complex<double>{1.0, 0.0};
    }
    return configuration(std::move(phases));
}

oce_outcome run_oce(const channel_realization& channel, const codebook& cb,
                    const radio_params& radio, unsigned p, random_stream& rng,
                    const ae_mode& mode)
{
    if (cb.kind() != codebook_kind::channel_estimation)
        throw contract_error("run_oce needs a channel-estimation codebook");
    if (cb.n_elements() != channel.z_d.size())
        throw shape_error("codebook and channel disagree on the element count");
    if (cb.size() < cb.n_elements())
        throw config_error("channel-estimation codebook must have C >= N");

    const double rho_u = radio.rho_u();
    const double sigma_b2 = radio.sigma_b2();

    std::vector<std::complex<double>> y(cb.size());
    for (std::size_t c = 0; c < cb.size(); ++c)
        y[c] = pilot_observation(channel.z_d, cb[c], rho_u, radio.pilot_noise ? sigma_b2 : 0.0, p,
                                 rng);

    oce_outcome out;
    out.estimated_channel = ls_estimate(y, cb);
    out.optimal_config = optimal_config(out.estimated_channel);
    const double gain = rho_u / sigma_b2;
    out.estimated_snr = gain * std::norm(combined_channel(out.optimal_config, out.estimated_channel));
    out.actual_snr = gain * std::norm(combined_channel(out.optimal_config, channel.z_d));
    out.spectral_efficiency = std::log2(1.0 + out.estimated_snr);
    out.algorithmic_error = mode.is_error(out.estimated_snr, out.actual_snr);
    return out;
}

} // namespace risctl
