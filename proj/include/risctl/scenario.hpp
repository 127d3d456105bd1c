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

#ifndef RISCTL_SCENARIO_HPP
#define RISCTL_SCENARIO_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "risctl/random.hpp"

namespace risctl {

using vec3 = std::array<double, 3>;
using cvec = std::vector<std::complex<double>>;

double distance(const vec3& a, const vec3& b);

// Fixed deployment: BS, RIS element grid and the box the UE is dropped in.
// The RIS lies in the x-z plane (normal +y) with its center at the origin.
struct geometry {
    vec3 bs_position{};
    vec3 ris_center{};
    std::vector<vec3> element_positions;
    vec3 ue_region_lo{};
    vec3 ue_region_hi{};
    double carrier_frequency_hz = 0.0;
    double element_spacing_m = 0.0;

    double wavelength() const;
    std::size_t n_elements() const { return element_positions.size(); }

    // Square sqrt(N) x sqrt(N) grid. The UE box corners are sorted per axis, so
    // (10, 20, -20) / (-10, 0, 0) style corner pairs are accepted. A spacing <= 0
    // selects half a wavelength.
    static geometry square_grid(std::size_t n_elements, double carrier_frequency_hz,
                                const vec3& bs_position, const vec3& ue_corner_a,
                                const vec3& ue_corner_b, double element_spacing_m = 0.0);
};

// Powers in dBm, bandwidths in Hz.
struct radio_params {
    double rho_u_dbm = 24.0;
    double rho_b_dbm = 24.0;
    double sigma_b2_dbm = -94.0;
    double sigma_u2_dbm = -94.0;
    double sigma_r2_dbm = -94.0;
    double bandwidth_data_hz = 180e3;
    double bandwidth_cc_ue_hz = 900e3;
    double bandwidth_cc_ris_hz = 900e3;
    // false: pilots are observed without noise; sigma_b2 still sets the SNR scale
    bool pilot_noise = true;

    double rho_u() const;    // W
    double sigma_b2() const; // W
};

struct channel_realization {
    cvec z_d;                // UE -> RIS -> BS, per element
    double lambda_u = 0.0;   // mean UE-CC SNR, linear
    double lambda_r = 0.0;   // mean RIS-CC SNR, linear; +inf for an error-free link
    vec3 ue_position{};
};

// Uniform point in the axis-aligned box [lo, hi]. Throws config_error if lo >= hi on any axis.
vec3 sample_ue_position(random_stream& rng, const vec3& lo, const vec3& hi);
vec3 sample_ue_position(random_stream& rng, const geometry& geo);

// Line-of-sight narrowband channel from `tx` to every element: common far-field
// amplitude wavelength / (4 pi r_c), with r_c measured to the element centroid, and
// exact spherical-wave phase -2 pi r_n / wavelength per element.
cvec los_channel(const vec3& tx, std::span<const vec3> elements, double wavelength);

// z = h (.) g
cvec equivalent_channel(std::span<const std::complex<double>> h,
                        std::span<const std::complex<double>> g);

// Exponential SNR draw with the given mean; +inf stays +inf.
double sample_cc_snr(random_stream& rng, double lambda);

// Drops a UE and builds the per-element data channel for it.
channel_realization draw_channel(random_stream& rng, const geometry& geo, double lambda_u,
                                 double lambda_r);

} // namespace risctl

#endif
