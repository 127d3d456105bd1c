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

#ifndef RISCTL_CODEBOOK_HPP
#define RISCTL_CODEBOOK_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "risctl/scenario.hpp"

namespace risctl {

// One RIS state: unit-modulus phase shift per element.
class configuration {
public:
    configuration() = default;
    // Throws config_error unless every entry has |phi_n| = 1 (within 1e-12).
    explicit configuration(cvec phases);

    // phi_n = exp(j * angle_n)
    static configuration from_angles(std::span<const double> angles);

    const cvec& phases() const { return phases_; }
    std::size_t size() const { return phases_.size(); }
    const std::complex<double>& operator[](std::size_t n) const { return phases_[n]; }

private:
    cvec phases_;
};

// phi^T z (plain transpose, no conjugation)
std::complex<double> combined_channel(const configuration& phi, std::span<const std::complex<double>> z);

enum class codebook_kind { channel_estimation, beam_sweeping_fixed, beam_sweeping_flexible };

// Ordered set of configurations. Every entry keeps its index in the common codebook,
// which is what control packets carry.
class codebook {
public:
    codebook(std::vector<configuration> configs, codebook_kind kind,
             std::vector<std::size_t> common_indices = {});

    std::size_t size() const { return configs_.size(); }
    std::size_t n_elements() const { return configs_.front().size(); }
    codebook_kind kind() const { return kind_; }
    const configuration& operator[](std::size_t c) const { return configs_[c]; }
    const std::vector<configuration>& configs() const { return configs_; }
    std::size_t common_index(std::size_t c) const { return common_indices_[c]; }

    codebook relabeled(codebook_kind kind) const;

    // max_{n,m} |(Theta^* Theta^T)_{nm} - C delta_{nm}|, computed once at construction
    double gram_deviation() const { return gram_deviation_; }

private:
    std::vector<configuration> configs_;
    codebook_kind kind_;
    std::vector<std::size_t> common_indices_;
    double gram_deviation_ = 0.0;
};

// [Theta]_{n,c} = exp(-j 2 pi n c / C), n < N, c < C. Requires C >= N.
codebook dft_codebook(std::size_t n_elements, std::size_t cardinality);

// Entries 0, stride, 2 stride, ... in order.
codebook subsample(const codebook& cb, std::size_t stride);

// Smallest b with 2^b >= C.
unsigned min_index_bits(std::size_t cardinality);

} // namespace risctl

#endif
