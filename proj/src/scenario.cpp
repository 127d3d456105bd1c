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

#include "risctl/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "risctl/errors.hpp"
#include "risctl/units.hpp"

namespace risctl {

double distance(const vec3& a, const vec3& b)
{
    const double dx = a[0] - b[0];
    const double dy = a[1] - b[1];
    const double dz = a[2] - b[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double geometry::wavelength() const
{
    return speed_of_light / carrier_frequency_hz;
}

geometry geometry::square_grid(std::size_t n_elements, double carrier_frequency_hz,
                               const vec3& bs_position, const vec3& ue_corner_a,
                               const vec3& ue_corner_b, double element_spacing_m)
{
    if (n_elements == 0)
        throw config_error("n_elements must be at least 1");
    const auto side = static_cast<std::size_t>(std::llround(std::sqrt(double(n_elements))));
    if (side * side != n_elements)
        throw config_error("n_elements = " + std::to_string(n_elements) +
                           " is not a perfect square");
    if (!(carrier_frequency_hz > 0.0))
        throw config_error("carrier frequency must be positive");

    geometry geo;
    geo.bs_position = bs_position;
    geo.ris_center = {0.0, 0.0, 0.0};
    geo.carrier_frequency_hz = carrier_frequency_hz;
    geo.element_spacing_m =
        element_spacing_m > 0.0 ? element_spacing_m : geo.wavelength() / 2.0;

    for (int axis = 0; axis < 3; ++axis) {
        geo.ue_region_lo[axis] = std::min(ue_corner_a[axis], ue_corner_b[axis]);
        geo.ue_region_hi[axis] = std::max(ue_corner_a[axis], ue_corner_b[axis]);
        if (!(geo.ue_region_lo[axis] < geo.ue_region_hi[axis]))
            throw config_error("UE region is degenerate along axis " + std::to_string(axis));
    }

    // x-z plane, row-major in z
    const double offset = (double(side) - 1.0) / 2.0;
    geo.element_positions.reserve(n_elements);
    for (std::size_t iz = 0; iz < side; ++iz)
        for (std::size_t ix = 0; ix < side; ++ix)
            geo.element_positions.push_back({(double(ix) - offset) * geo.element_spacing_m, 0.0,
                                             (double(iz) - offset) * geo.element_spacing_m});
    return geo;
}

double radio_params::rho_u() const
{
    return dbm_to_watt(rho_u_dbm);
}

double radio_params::sigma_b2() const
{
    return dbm_to_watt(sigma_b2_dbm);
}

vec3 sample_ue_position(random_stream& rng, const vec3& lo, const vec3& hi)
{
    for (int axis = 0; axis < 3; ++axis)
        if (!(lo[axis] < hi[axis]))
            throw config_error("UE sampling box needs lo < hi on every axis");
    vec3 x;
    for (int axis = 0; axis < 3; ++axis)
        x[axis] = rng.uniform(lo[axis], hi[axis]);
    return x;
}

vec3 sample_ue_position(random_stream& rng, const geometry& geo)
{
    return sample_ue_position(rng, geo.ue_region_lo, geo.ue_region_hi);
}

cvec los_channel(const vec3& tx, std::span<const vec3> elements, double wavelength)
{
    if (elements.empty())
        throw shape_error("los_channel needs at least one element");
    if (!(wavelength > 0.0))
        throw domain_error("wavelength must be positive");

    vec3 centroid{0.0, 0.0, 0.0};
    for (const auto& e : elements)
        for (int axis = 0; axis < 3; ++axis)
            centroid[axis] += e[axis];
    for (auto& c : centroid)
        c /= double(elements.size());

    const double r_center = distance(tx, centroid);
    if (!(r_center > 0.0))
        throw domain_error("transmitter coincides with the array center");
    const double amplitude = wavelength / (4.0 * std::numbers::pi * r_center);
    const double k = 2.0 * std::numbers::pi / wavelength;

    cvec out;
    out.reserve(elements.size());
    for (const auto& e : elements) {
        const double r = distance(tx, e);
        if (!(r > 0.0))
            throw domain_error("transmitter coincides with an element");
        out.push_back(std::polar(amplitude, -k * r));
    }
    return out;
}

cvec equivalent_channel(std::span<const std::complex<double>> h,
                        std::span<const std::complex<double>> g)
{
    if (h.size() != g.size())
        throw shape_error("equivalent_channel: h has " + std::to_string(h.size()) +
                          " entries, g has " + std::to_string(g.size()));
    cvec z(h.size());
    std::transform(h.begin(), h.end(), g.begin(), z.begin(),
                   [](auto a, auto b) { return a * b; });
    return z;
}

double sample_cc_snr(random_stream& rng, double lambda)
{
    if (!(lambda > 0.0))
        throw config_error("mean control-channel SNR must be positive");
    if (std::isinf(lambda))
        return infinity;
    return rng.exponential(lambda);
}

channel_realization draw_channel(random_stream& rng, const geometry& geo, double lambda_u,
                                 double lambda_r)
{
    if (!(lambda_u > 0.0) || !(lambda_r > 0.0))
        throw config_error("mean control-channel SNRs must be positive");
    channel_realization ch;
    ch.ue_position = sample_ue_position(rng, geo);
    const auto h = los_channel(ch.ue_position, geo.element_positions, geo.wavelength());
    const auto g = los_channel(geo.bs_position, geo.element_positions, geo.wavelength());
    ch.z_d = equivalent_channel(h, g);
    ch.lambda_u = lambda_u;
    ch.lambda_r = lambda_r;
    return ch;
}

} // namespace risctl
