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

#ifndef RISCTL_OCE_HPP
#define RISCTL_OCE_HPP

#include <complex>
#include <span>
#include <string>

#include "risctl/codebook.hpp"
#include "risctl/random.hpp"
#include "risctl/scenario.hpp"

namespace risctl {

// How an optimal-configuration-estimation trial decides it overestimated the rate.
//   strict      estimated SNR > actual SNR (beyond a 1e-9 relative rounding allowance)
//   negligible  never (estimation noise ignored)
//   margin      estimated SNR > actual SNR * 10^(margin_db / 10)
struct ae_mode {
    enum class kind { strict, negligible, margin };
    kind mode = kind::negligible;
    double margin_db = 0.0;

    // "strict" | "negligible" | "margin:<dB>"
    static ae_mode parse(const std::string& text);
    std::string to_string() const;
    bool is_error(double estimated_snr, double actual_snr) const;
};

struct oce_outcome {
    cvec estimated_channel;
    configuration optimal_config;
    double estimated_snr = 0.0; // linear
    double actual_snr = 0.0;    // linear
    double spectral_efficiency = 0.0; // log2(1 + estimated_snr)
    bool algorithmic_error = false;
};

// Matched-filter output of one pilot replica normalised by sqrt(rho_u) p:
// phi^T z + w, w ~ CN(0, sigma_b2 / (p rho_u)). Powers in W.
std::complex<double> pilot_observation(std::span<const std::complex<double>> z,
                                       const configuration& phi, double rho_u, double sigma_b2,
                                       unsigned p, random_stream& rng);

// Least-squares channel estimate (1/C) Theta^* y for an orthogonal codebook.
cvec ls_estimate(std::span<const std::complex<double>> observations, const codebook& theta);

// Phase-conjugate configuration exp(-j angle(z_hat_n)); zero entries map to phase 0.
configuration optimal_config(std::span<const std::complex<double>> z_hat);

oce_outcome run_oce(const channel_realization& channel, const codebook& cb,
                    const radio_params& radio, unsigned p, random_stream& rng,
                    const ae_mode& mode = {});

} // namespace risctl

#endif
