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

#ifndef RISCTL_TIMING_HPP
#define RISCTL_TIMING_HPP

#include <chrono>
#include <cstddef>
#include <optional>

#include "risctl/paradigm.hpp"

namespace risctl {

// All durations are integer nanoseconds so phase sums are exact.
using nanos = std::chrono::nanoseconds;

nanos from_seconds(double s);
inline double to_seconds(nanos d) { return std::chrono::duration<double>(d).count(); }
inline double to_ms(nanos d) { return std::chrono::duration<double, std::milli>(d).count(); }

struct frame_params {
    nanos tau{};                         // frame duration
    nanos tti{};                         // T
    nanos guard{};                       // tau_s, RIS switching time
    unsigned optimization_ttis = 5;      // A
    std::optional<nanos> symbol_period;  // T_n
    std::optional<unsigned> pilot_override;

    // 0 < guard < tti, tau >= tti. Throws config_error.
    void validate() const;
};

struct frame_timing {
    nanos setup{};
    nanos algorithmic{};
    nanos ack{};
    nanos payload{}; // clamped at 0

    nanos overhead() const { return setup + algorithmic + ack; }
};

// T (OBCC) or 3T (IBCC)
nanos setup_duration(cc_kind kind, nanos tti);

// setup_duration + tau_s
nanos ack_duration(cc_kind kind, nanos tti, nanos guard);

// OCE: (C + A) T; fixed sweep: C T; flexible sweep: (2 c* - 1) T with 1-based c*.
// A flexible sweep that found nothing passes c* = C. Throws contract_error when
// c* is missing or out of range for the flexible frame.
nanos algorithmic_duration(paradigm p, nanos tti, std::size_t cardinality,
                           unsigned optimization_ttis,
                           std::optional<std::size_t> c_star_one_based = std::nullopt);

// floor((T - tau_s) / T_n) unless overridden. Throws config_error on a zero result.
unsigned pilot_length(nanos tti, nanos guard, std::optional<nanos> symbol_period,
                      std::optional<unsigned> pilot_override = std::nullopt);
unsigned pilot_length(const frame_params& frame);

// max(0, tau - setup - alg - ack)
nanos payload_time(nanos tau, nanos setup, nanos algorithmic, nanos ack);

frame_timing compute_timing(paradigm p, cc_kind kind, const frame_params& frame,
                            std::size_t cardinality,
                            std::optional<std::size_t> c_star_one_based = std::nullopt);

} // namespace risctl

#endif
