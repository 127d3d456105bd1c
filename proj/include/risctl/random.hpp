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

#ifndef RISCTL_RANDOM_HPP
#define RISCTL_RANDOM_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace risctl {

// Independent purposes that consume randomness inside one Monte Carlo trial.
// Each gets its own sub-stream so that, e.g., the UE drop is identical no matter
// which paradigm or target SNR consumes the pilot noise afterwards.
enum class stream_tag : std::uint32_t {
    position = 1,
    pilot_noise = 2,
    control = 3,
    user = 4, // free for tests and ad-hoc use
};

// Seeded random stream. A stream is a pure function of (master seed, trial index, tag),
// so per-trial results never depend on evaluation order or thread count.
class random_stream {
public:
    explicit random_stream(std::uint64_t seed);
    random_stream(std::uint64_t master_seed, std::uint64_t trial_index, stream_tag tag);

    double uniform();                     // [0, 1)
    double uniform(double lo, double hi); // [lo, hi)
    double normal(double stddev);
    double exponential(double mean);
    std::complex<double> complex_normal(double variance); // CN(0, variance)

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> unit_normal_; // keeps the spare variate of each pair
};

} // namespace risctl

#endif
