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

#include "risctl/control.hpp"

#include <cmath>
#include <string>

#include "risctl/errors.hpp"

namespace risctl {

const char* to_string(packet_kind k)
{
    switch (k) {
    case packet_kind::set_u:
        return "SET-U";
    case packet_kind::set_r:
        return "SET-R";
    case packet_kind::ack_u:
        return "ACK-U";
    case packet_kind::ack_r:
        return "ACK-R";
    }
    return "?";
}

destination destination_of(packet_kind k)
{
    return (k == packet_kind::set_u || k == packet_kind::ack_u) ? destination::ue
                                                                 : destination::risc;
}

unsigned packet_bits(paradigm p, packet_kind packet, const bit_fields& f, std::size_t n_elements,
                     std::size_t cardinality)
{
    const unsigned preamble = f.b_id + 1;
    const auto card = static_cast<unsigned>(cardinality);
    switch (packet) {
    case packet_kind::set_u:
        return preamble + f.b_frame + f.b_guard + f.b_conf;
    case packet_kind::set_r:
        return preamble + f.b_frame + card * f.b_conf;
    case packet_kind::ack_u:
        return preamble + (p == paradigm::oce ? f.b_se : 0u);
    case packet_kind::ack_r:
        return preamble + (p == paradigm::oce ? static_cast<unsigned>(n_elements) * f.b_quant
                                              : f.b_conf);
    }
    throw contract_error("unknown packet kind");
}

nanos useful_time(paradigm p, packet_kind packet, nanos tti, nanos guard,
                  unsigned optimization_ttis)
{
    if (guard >= tti)
        throw config_error("tau_s must be < T");
    switch (packet) {
    case packet_kind::set_u:
        return tti - guard;
    case packet_kind::ack_u:
        if (p != paradigm::oce)
            return tti - guard;
        // the optimisation TTIs absorb the switch back to the control configuration
        if (optimization_ttis < 1)
            throw contract_error("OCE ACK-U without guard needs A >= 1");
        return tti;
    case packet_kind::set_r:
    case packet_kind::ack_r:
        return tti;
    }
    throw contract_error("unknown packet kind");
}

std::array<packet_budget, 4> make_budgets(paradigm p, const bit_fields& fields,
                                          std::size_t n_elements, std::size_t cardinality,
                                          const frame_params& frame, const radio_params& radio)
{
    std::array<packet_budget, 4> out;
    const packet_kind order[4] = {packet_kind::set_u, packet_kind::ack_u, packet_kind::set_r,
                                  packet_kind::ack_r};
    for (int i = 0; i < 4; ++i) {
        auto& b = out[i];
        b.packet = order[i];
        b.dest = destination_of(b.packet);
        b.bits = packet_bits(p, b.packet, fields, n_elements, cardinality);
        b.useful_time_s = to_seconds(
            useful_time(p, b.packet, frame.tti, frame.guard, frame.optimization_ttis));
        b.bandwidth_hz =
            b.dest == destination::ue ? radio.bandwidth_cc_ue_hz : radio.bandwidth_cc_ris_hz;
    }
    return out;
}

double load_factor(const packet_budget& b)
{
    if (!(b.useful_time_s > 0.0) || !(b.bandwidth_hz > 0.0))
        throw domain_error("packet needs positive useful time and bandwidth");
    return std::exp2(double(b.bits) / (b.useful_time_s * b.bandwidth_hz));
}

double packet_outage(unsigned bits, double useful_time_s, double bandwidth_hz, double lambda)
{
    packet_budget b;
    b.bits = bits;
    b.useful_time_s = useful_time_s;
    b.bandwidth_hz = bandwidth_hz;
    return packet_outage(b, lambda);
}

double packet_outage(const packet_budget& b, double lambda)
{
    const double threshold = load_factor(b) - 1.0;
    if (!(lambda > 0.0))
        throw config_error("mean control-channel SNR must be positive");
    if (std::isinf(lambda))
        return 0.0;
    return -std::expm1(-threshold / lambda);
}

namespace {

void check_budget_set(std::span<const packet_budget> budgets)
{
    if (budgets.size() != 4)
        throw contract_error("correct-control probability needs exactly 4 packet budgets, got " +
                             std::to_string(budgets.size()));
    int ue = 0;
    for (const auto& b : budgets)
        ue += b.dest == destination::ue;
    if (ue != 2)
        throw contract_error("correct-control probability needs 2 UE and 2 RISC packets");
}

} // namespace

double correct_control_prob(cc_kind kind, std::span<const packet_budget> budgets, double lambda_u,
                            double lambda_r)
{
    check_budget_set(budgets);
    double p = 1.0;
    for (const auto& b : budgets) {
        if (b.dest == destination::ue)
            p *= 1.0 - packet_outage(b, lambda_u);
        else if (kind == cc_kind::ibcc)
            p *= 1.0 - packet_outage(b, lambda_r);
    }
    return p;
}

double correct_control_prob_closed_form(cc_kind kind, std::span<const packet_budget> budgets,
                                        double lambda_u, double lambda_r)
{
    check_budget_set(budgets);
    if (!(lambda_u > 0.0) || !(lambda_r > 0.0))
        throw config_error("mean control-channel SNRs must be positive");
    double sum_u = 0.0;
    double sum_r = 0.0;
    for (const auto& b : budgets)
        (b.dest == destination::ue ? sum_u : sum_r) += load_factor(b);
    double p = std::exp((2.0 - sum_u) / lambda_u);
    if (kind == cc_kind::ibcc)
        p *= std::exp((2.0 - sum_r) / lambda_r);
    return p;
}

double excess_load(std::span<const packet_budget> budgets)
{
    double s = 0.0;
    for (const auto& b : budgets)
        s += load_factor(b) - 1.0;
    return s;
}

double min_lambda_obcc(double target_pcc, std::span<const packet_budget> ue_budgets)
{
    if (!(target_pcc > 0.0 && target_pcc < 1.0))
        throw config_error("target correct-control probability must be in (0, 1)");
    const double s_u = excess_load(ue_budgets);
    if (s_u <= 0.0)
        return 0.0;
    return s_u / -std::log(target_pcc);
}

std::vector<frontier_point> reliability_frontier(double target_pcc,
                                                 std::span<const packet_budget> ue_budgets,
                                                 std::span<const packet_budget> ris_budgets,
                                                 std::span<const double> lambda_u_grid)
{
    if (!(target_pcc > 0.0 && target_pcc < 1.0))
        throw config_error("target correct-control probability must be in (0, 1)");
    const double budget = -std::log(target_pcc);
    const double s_u = excess_load(ue_budgets);
    const double s_r = excess_load(ris_budgets);

    std::vector<frontier_point> out;
    out.reserve(lambda_u_grid.size());
    for (const double lambda_u : lambda_u_grid) {
        if (!(lambda_u > 0.0))
            throw config_error("lambda_u grid values must be positive");
        frontier_point pt;
        pt.lambda_u = lambda_u;
        const double left = budget - s_u / lambda_u;
        // relative tolerance: lambda_u == min_lambda_obcc lands here up to rounding
        if (left > 1e-12 * budget)
            pt.lambda_r_min = s_r > 0.0 ? s_r / left : 0.0;
        out.push_back(pt);
    }
    return out;
}

bool sample_control_success(random_stream& rng, cc_kind kind,
                            std::span<const packet_budget> budgets, double lambda_u,
                            double lambda_r)
{
    check_budget_set(budgets);
    bool ok = true;
    for (const auto& b : budgets) {
        if (b.dest == destination::risc && kind == cc_kind::obcc)
            continue;
        const double snr = sample_cc_snr(rng, b.dest == destination::ue ? lambda_u : lambda_r);
        // draw every packet even after a failure so the stream use is fixed
        ok = ok && snr > load_factor(b) - 1.0;
    }
    return ok;
}

} // namespace risctl
