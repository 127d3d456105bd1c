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

#include "risctl/random.hpp"

#include <cmath>

namespace risctl {

namespace {

// SplitMix64 finaliser
std::uint64_t mix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Chained so that every key component passes through a full mixing round.
std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t trial_index, stream_tag tag)
{
    return mix(mix(mix(master_seed) ^ trial_index) ^ static_cast<std::uint64_t>(tag));
}

} // namespace

random_stream::random_stream(std::uint64_t seed) : engine_(seed) {}

random_stream::random_stream(std::uint64_t master_seed, std::uint64_t trial_index, stream_tag tag)
    : engine_(substream_seed(master_seed, trial_index, tag))
{
}

double random_stream::uniform()
{
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
}

double random_stream::uniform(double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double random_stream::normal(double stddev)
{
    return stddev * unit_normal_(engine_);
}

double random_stream::exponential(double mean)
{
    return std::exponential_distribution<double>(1.0 / mean)(engine_);
}

std::complex<double> random_stream::complex_normal(double variance)
{
    const double s = std::sqrt(variance / 2.0);
    const double re = normal(s);
    const double im = normal(s);
    return {re, im};
}

} // namespace risctl
