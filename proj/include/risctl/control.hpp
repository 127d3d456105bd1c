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

#ifndef RISCTL_CONTROL_HPP
#define RISCTL_CONTROL_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "risctl/paradigm.hpp"
#include "risctl/random.hpp"
#include "risctl/scenario.hpp"
#include "risctl/timing.hpp"

namespace risctl {

enum class packet_kind { set_u, set_r, ack_u, ack_r };
enum class destination { ue, risc };

const char* to_string(packet_kind k);
destination destination_of(packet_kind k);

// Field widths of the control packets, in bits.
struct bit_fields {
    unsigned b_id = 8;
    unsigned b_frame = 16;
    unsigned b_guard = 16;
    unsigned b_conf = 8;
    unsigned b_se = 6;
    unsigned b_quant = 2;
};

struct packet_budget {
    packet_kind packet = packet_kind::set_u;
    unsigned bits = 0;
    double useful_time_s = 0;
    double bandwidth_hz = 0;
    destination dest = destination::ue;
};

// Informative bits: preamble (b_id + SET/ACK flag) plus the packet payload.
// `cardinality` is the size of the codebook announced in SET-R.
unsigned packet_bits(paradigm p, packet_kind packet, const bit_fields& fields,
                     std::size_t n_elements, std::size_t cardinality);

// Part of the packet's TTI not lost to RIS switching. The OCE ACK-U skips the guard,
// which needs at least one optimisation TTI in front of it (contract_error otherwise).
nanos useful_time(paradigm p, packet_kind packet, nanos tti, nanos guard,
                  unsigned optimization_ttis = 1);

// The four budgets SET-U, ACK-U, SET-R, ACK-R (in that order).
std::array<packet_budget, 4> make_budgets(paradigm p, const bit_fields& fields,
                                          std::size_t n_elements, std::size_t cardinality,
                                          const frame_params& frame, const radio_params& radio);

// 2^(bits / (tau B)); the SNR threshold of the packet is this minus one.
double load_factor(const packet_budget& b);

// 1 - exp(-(2^(bits/(tau B)) - 1) / lambda); 0 for lambda = +inf.
double packet_outage(unsigned bits, double useful_time_s, double bandwidth_hz, double lambda);
double packet_outage(const packet_budget& b, double lambda);

// Product of per-packet successes. Exactly two UE and two RISC budgets are required.
// OBCC ignores lambda_r (error-free RIS link).
double correct_control_prob(cc_kind kind, std::span<const packet_budget> budgets, double lambda_u,
                            double lambda_r);

// exp{(2 - sum_u 2^.) / lambda_u} exp{(2 - sum_r 2^.) / lambda_r}
double correct_control_prob_closed_form(cc_kind kind, std::span<const packet_budget> budgets,
                                        double lambda_u, double lambda_r);

// S = sum_i 2^(b_i / (tau_i B_i)) - count
double excess_load(std::span<const packet_budget> budgets);

// Smallest lambda_u meeting `target` when the RIS link is error free. 0 if S_u <= 0.
double min_lambda_obcc(double target_pcc, std::span<const packet_budget> ue_budgets);

struct frontier_point {
    double lambda_u = 0;
    std::optional<double> lambda_r_min; // empty: no lambda_r reaches the target
};

std::vector<frontier_point> reliability_frontier(double target_pcc,
                                                 std::span<const packet_budget> ue_budgets,
                                                 std::span<const packet_budget> ris_budgets,
                                                 std::span<const double> lambda_u_grid);

// Draws one CC SNR per packet and checks it against the packet threshold.
bool sample_control_success(random_stream& rng, cc_kind kind,
                            std::span<const packet_budget> budgets, double lambda_u,
                            double lambda_r);

} // namespace risctl

#endif
