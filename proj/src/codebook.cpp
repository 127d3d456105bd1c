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

#include "risctl/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "risctl/errors.hpp"

namespace risctl {

namespace {

double compute_gram_deviation(const std::vector<configuration>& configs)
{
    const std::size_t n_el = configs.front().size();
    const double card = double(configs.size());
    double worst = 0.0;
    for (std::size_t n = 0; n < n_el; ++n) {
        for (std::size_t m = n; m < n_el; ++m) {
            std::complex<double> acc{0.0, 0.0};
            for (const auto& cfg : configs)
                acc += std::conj(cfg[n]) * cfg[m];
            if (n == m)
                acc -= card;
            worst = std::max(worst, std::abs(acc)); // Hermitian, upper triangle suffices
        }
    }
    return worst;
}

} // namespace

configuration::configuration(cvec phases) : phases_(std::move(phases))
{
    for (std::size_t n = 0; n < phases_.size(); ++n)
        if (std::abs(std::abs(phases_[n]) - 1.0) > 1e-12)
            throw config_error("configuration entry " + std::to_string(n) +
                               " is not unit modulus");
}

configuration configuration::from_angles(std::span<const double> angles)
{
    cvec phases(angles.size());
    std::transform(angles.begin(), angles.end(), phases.begin(),
                   [](double a) { return std::polar(1.0, a); });
    return configuration(std::move(phases));
}

std::complex<double> combined_channel(const configuration& phi, std::span<const std::complex<double>> z)
{
    if (phi.size() != z.size())
        throw shape_error("configuration has " + std::to_string(phi.size()) +
                          " elements, channel has " + std::to_string(z.size()));
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t n = 0; n < z.size(); ++n)
        acc += phi[n] * z[n];
    return acc;
}

codebook::codebook(std::vector<configuration> configs, codebook_kind kind,
                   std::vector<std::size_t> common_indices)
    : configs_(std::move(configs)), kind_(kind), common_indices_(std::move(common_indices))
{
    if (configs_.empty())
        throw config_error("codebook needs at least one configuration");
    for (const auto& c : configs_)
        if (c.size() != configs_.front().size() || c.size() == 0)
            throw shape_error("codebook configurations differ in length");
    if (common_indices_.empty()) {
        common_indices_.resize(configs_.size());
        std::iota(common_indices_.begin(), common_indices_.end(), std::size_t{0});
    }
    if (common_indices_.size() != configs_.size())
        throw shape_error("one common index per configuration required");
    gram_deviation_ = compute_gram_deviation(configs_);
}

codebook codebook::relabeled(codebook_kind kind) const
{
    return codebook(configs_, kind, common_indices_);
}

codebook dft_codebook(std::size_t n_elements, std::size_t cardinality)
{
    if (n_elements == 0)
        throw config_error("DFT codebook needs at least one element");
    if (cardinality < n_elements)
        throw config_error("DFT codebook cardinality " + std::to_string(cardinality) +
                           " is below the element count " + std::to_string(n_elements) +
                           "; the channel estimate would be rank deficient");
    std::vector<configuration> configs;
    configs.reserve(cardinality);
    for (std::size_t c = 0; c < cardinality; ++c) {
        cvec phases(n_elements);
        for (std::size_t n = 0; n < n_elements; ++n) {
            // reduce n c mod C first to keep the angle exact
            const double frac = double((n * c) % cardinality) / double(cardinality);
            phases[n] = std::polar(1.0, -2.0 * std::numbers::pi * frac);
        }
        configs.emplace_back(std::move(phases));
    }
    return codebook(std::move(configs), codebook_kind::channel_estimation);
}

codebook subsample(const codebook& cb, std::size_t stride)
{
    if (stride == 0)
        throw config_error("subsampling stride must be at least 1");
    std::vector<configuration> configs;
    std::vector<std::size_t> indices;
    for (std::size_t c = 0; c < cb.size(); c += stride) {
        configs.push_back(cb[c]);
        indices.push_back(cb.common_index(c));
    }
    return codebook(std::move(configs), cb.kind(), std::move(indices));
}

unsigned min_index_bits(std::size_t cardinality)
{
    unsigned bits = 0;
    while ((std::size_t{1} << bits) < cardinality)
        ++bits;
    return bits;
}

} // namespace risctl
