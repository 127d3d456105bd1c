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

#ifndef RISCTL_ENGINE_HPP
#define RISCTL_ENGINE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "risctl/bsw.hpp"
#include "risctl/codebook.hpp"
#include "risctl/control.hpp"
#include "risctl/oce.hpp"
#include "risctl/paradigm.hpp"
#include "risctl/scenario.hpp"
#include "risctl/timing.hpp"
#include "risctl/units.hpp"

namespace risctl {

// Every tunable of a simulation, typed. Defaults reproduce the reference parameter set.
struct simulation_params {
    // scenario
    std::size_t n_elements = 100;
    double carrier_frequency_hz = 3e9;
    double element_spacing_m = 0.0; // 0: half wavelength
    vec3 bs_position{25.0, 5.0, 5.0};
    vec3 ue_corner_a{-10.0, 0.0, 0.0};
    vec3 ue_corner_b{10.0, 20.0, -20.0};
    radio_params radio;
    double lambda_u = infinity; // linear
    double lambda_r = infinity; // linear, only used with IBCC

    // paradigm
    paradigm par = paradigm::oce;
    cc_kind cc = cc_kind::obcc;
    std::size_t cardinality_ce = 0; // 0: N
    std::size_t bsw_fixed_stride = 3;
    ae_mode ae;
    double gamma0_fixed_db = 10.9;
    double gamma0_flexible_db = 12.4;

    // frame
    frame_params frame{std::chrono::milliseconds(60), std::chrono::microseconds(500),
                       std::chrono::microseconds(50), 5, std::nullopt, 1u};

    bit_fields bits;
};

// A validated, ready-to-run simulation. Codebooks are shared between copies, so
// variants (another paradigm, another target SNR) are cheap to derive.
class experiment {
public:
    explicit experiment(simulation_params params);

    const simulation_params& params() const { return params_; }
    const geometry& geo() const { return geo_; }
    unsigned pilot_length() const { return pilot_length_; }

    // Codebook swept by the given paradigm: DFT book for OCE and flexible sweeps,
    // its subsampled view for the fixed sweep.
    const codebook& codebook_for(paradigm p) const;
    const codebook& common_codebook() const { return *ce_book_; }
    std::array<packet_budget, 4> budgets(paradigm p) const;
    double gamma0(paradigm p) const; // linear

    experiment with_paradigm(paradigm p) const;
    experiment with_cc_kind(cc_kind k) const;
    experiment with_frame_duration(nanos tau) const;
    experiment with_gamma0_db(paradigm p, double gamma0_db) const;
    experiment with_lambdas(double lambda_u, double lambda_r) const;

private:
    simulation_params params_;
    geometry geo_;
    unsigned pilot_length_ = 1;
    std::shared_ptr<const codebook> ce_book_;
    std::shared_ptr<const codebook> fixed_book_;
};

using link_outcome = std::variant<oce_outcome, bsw_outcome>;

struct trial_result {
    link_outcome outcome;
    frame_timing timing;
    bool control_success = false;
    double goodput_bps = 0;

    bool algorithmic_error() const;
    double spectral_efficiency() const;
};

// Runs the algorithmic phase of the configured paradigm on one channel draw.
link_outcome simulate_link(const experiment& exp, const channel_realization& channel,
                           random_stream& pilot_rng);

// Frame timing for an outcome; a flexible sweep uses its realised c*, or all C when nothing was found.
frame_timing timing_for(const experiment& exp, const link_outcome& outcome, nanos tau);

// (tau_pay / tau) B_d eta, or 0 after a control failure, an algorithmic error or an empty payload.
double goodput(const experiment& exp, const link_outcome& outcome, bool control_success,
               nanos tau);

// Deterministic in (exp, trial_index, master_seed) only.
trial_result run_trial(const experiment& exp, std::uint64_t trial_index,
                       std::uint64_t master_seed);

struct experiment_summary {
    double mean_goodput_bps = 0;
    double empirical_p_ae = 0;
    double empirical_p_cc = 0;
    // mean spectral efficiency over trials without algorithmic error (0 if none)
    double mean_efficiency_no_ae = 0;
    std::vector<double> goodput_cdf_samples;   // sorted
    std::vector<double> actual_snr_samples;    // sorted, linear
    std::vector<double> estimated_snr_samples; // sorted, linear
    std::size_t n_trials = 0;
    std::uint64_t master_seed = 0;
};

// `threads` = 0 takes RISCTL_THREADS from the environment, else the hardware count.
unsigned resolve_threads(unsigned threads);

experiment_summary run_experiment(const experiment& exp, std::size_t n_trials,
                                  std::uint64_t master_seed, unsigned threads = 0);

// One summary per frame duration; every duration sees the same trials.
std::vector<experiment_summary> sweep_frame_duration(const experiment& exp,
                                                     std::span<const nanos> taus,
                                                     std::size_t n_trials,
                                                     std::uint64_t master_seed,
                                                     unsigned threads = 0);

struct calibration_result {
    double best_gamma0_db = 0;
    std::vector<std::pair<double, double>> table; // (gamma0 dB, mean goodput bit/s)
};

// Mean goodput per target SNR with common random numbers; ties go to the lower target.
// Needs a beam-sweeping paradigm.
calibration_result calibrate_gamma0(const experiment& exp, std::span<const double> gamma0_grid_db,
                                    std::size_t n_trials, std::uint64_t master_seed,
                                    unsigned threads = 0);

// Per swept configuration (actual, estimated) SNRs, linear, unsorted.
std::pair<std::vector<double>, std::vector<double>>
sweep_snr_samples(const experiment& exp, std::size_t n_trials, std::uint64_t master_seed,
                  unsigned threads = 0);

// p_cc (1 - p_ae) (1 - overhead / tau) B_d eta, floored at 0.
double utility_closed_form(double p_cc, double p_ae, const frame_timing& timing, nanos tau,
                           double bandwidth_data_hz, double eta);

} // namespace risctl

#endif
