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

#include "risctl/timing.hpp"

#include <cmath>
#include <string>

#include "risctl/errors.hpp"

namespace risctl {

nanos from_seconds(double s)
{
    if (!std::isfinite(s))
        throw config_error("duration must be finite");
    return nanos(std::llround(s * 1e9));
}

void frame_params::validate() const
{
    if (tti <= nanos::zero())
        throw config_error("T must be positive");
    if (guard <= nanos::zero())
        throw config_error("tau_s must be positive");
    if (guard >= tti)
        throw config_error("tau_s must be < T");
    if (tau < tti)
        throw config_error("tau must be >= T");
    if (symbol_period && *symbol_period <= nanos::zero())
        throw config_error("T_n must be positive");
    if (pilot_override && *pilot_override == 0)
        throw config_error("p must be at least 1");
}

nanos setup_duration(cc_kind kind, nanos tti)
{
    return kind == cc_kind::obcc ? tti : 3 * tti;
}

nanos ack_duration(cc_kind kind, nanos tti, nanos guard)
{
    return setup_duration(kind, tti) + guard;
}

nanos algorithmic_duration(paradigm p, nanos tti, std::size_t cardinality,
                           unsigned optimization_ttis, std::optional<std::size_t> c_star_one_based)
{
    switch (p) {
    case paradigm::oce:
        return static_cast<nanos::rep>(cardinality + optimization_ttis) * tti;
    case paradigm::bsw_fixed:
        return static_cast<nanos::rep>(cardinality) * tti;
    case paradigm::bsw_flexible:
        if (!c_star_one_based)
            throw contract_error("flexible sweep timing needs the selected index");
        if (*c_star_one_based < 1 || *c_star_one_based > cardinality)
            throw contract_error("selected index " + std::to_string(*c_star_one_based) +
                                 " outside 1.." + std::to_string(cardinality));
        return static_cast<nanos::rep>(2 * *c_star_one_based - 1) * tti;
    }
    throw contract_error("unknown paradigm");
}

unsigned pilot_length(nanos tti, nanos guard, std::optional<nanos> symbol_period,
                      std::optional<unsigned> pilot_override)
{
    if (pilot_override) {
        if (*pilot_override == 0)
            throw config_error("p must be at least 1");
        return *pilot_override;
    }
    if (!symbol_period)
        throw config_error("pilot length needs either p or T_n");
    if (*symbol_period <= nanos::zero())
        throw config_error("T_n must be positive");
    if (guard >= tti)
        throw config_error("tau_s must be < T");
    const auto p = (tti - guard) / *symbol_period;
    if (p < 1)
        throw config_error("T_n is longer than T - tau_s: no pilot symbol fits");
    return static_cast<unsigned>(p);
}

unsigned pilot_length(const frame_params& frame)
{
    return pilot_length(frame.tti, frame.guard, frame.symbol_period, frame.pilot_override);
}

nanos payload_time(nanos tau, nanos setup, nanos algorithmic, nanos ack)
{
    const nanos left = tau - setup - algorithmic - ack;
    return left > nanos::zero() ? left : nanos::zero();
}

frame_timing compute_timing(paradigm p, cc_kind kind, const frame_params& frame,
                            std::size_t cardinality, std::optional<std::size_t> c_star_one_based)
{
    frame_timing t;
    t.setup = setup_duration(kind, frame.tti);
    t.algorithmic = algorithmic_duration(p, frame.tti, cardinality, frame.optimization_ttis,
                                         c_star_one_based);
    t.ack = ack_duration(kind, frame.tti, frame.guard);
    t.payload = payload_time(frame.tau, t.setup, t.algorithmic, t.ack);
    return t;
}

} // namespace risctl
