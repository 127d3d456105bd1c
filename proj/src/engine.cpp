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

#include "risctl/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "risctl/errors.hpp"

namespace risctl {

namespace {

// Runs body(i) for i in [0, n) on `threads` workers with a static contiguous split.
// Results must be written to per-index slots; the first exception is rethrown.
template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t begin = n * t / threads;
        const std::size_t end = n * (t + 1) / threads;
        workers.emplace_back([&, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i)
                    body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    workers.clear(); // joins
    if (failure)
        std::rethrow_exception(failure);
}

struct trial_record {
    double goodput = 0;
    double eta = 0;
    double actual_snr = 0;
    double estimated_snr = 0;
    bool has_snr = false;
    bool algorithmic_error = false;
    bool control_success = false;
};

bool outcome_error(const link_outcome& o)
{
    return std::visit([](const auto& v) { return v.algorithmic_error; }, o);
}

double outcome_efficiency(const link_outcome& o)
{
    return std::visit([](const auto& v) { return v.spectral_efficiency; }, o);
}

trial_record make_record(const link_outcome& outcome, bool control_success, double goodput_bps)
{
    trial_record r;
    r.goodput = goodput_bps;
    r.eta = outcome_efficiency(outcome);
    r.algorithmic_error = outcome_error(outcome);
    r.control_success = control_success;
    if (const auto* oce = std::get_if<oce_outcome>(&outcome)) {
        r.actual_snr = oce->actual_snr;
        r.estimated_snr = oce->estimated_snr;
        r.has_snr = true;
    } else {
        const auto& bsw = std::get<bsw_outcome>(outcome);
        if (bsw.selected_index) {
            r.actual_snr = *bsw.actual_snr;
            r.estimated_snr = *bsw.estimated_snr;
            r.has_snr = true;
        }
    }
    return r;
}

experiment_summary summarize(std::span<const trial_record> records, std::uint64_t master_seed)
{
    experiment_summary s;
    s.n_trials = records.size();
    s.master_seed = master_seed;
    if (records.empty())
        return s;

    double goodput_sum = 0.0;
    double eta_sum = 0.0;
    std::size_t errors = 0;
    std::size_t controls = 0;
    s.goodput_cdf_samples.reserve(records.size());
    for (const auto& r : records) {
        goodput_sum += r.goodput;
        s.goodput_cdf_samples.push_back(r.goodput);
        if (r.algorithmic_error)
            ++errors;
        else
            eta_sum += r.eta;
        controls += r.control_success;
        if (r.has_snr) {
            s.actual_snr_samples.push_back(r.actual_snr);
            s.estimated_snr_samples.push_back(r.estimated_snr);
        }
    }
    const double n = double(records.size());
    s.mean_goodput_bps = goodput_sum / n;
    s.empirical_p_ae = double(errors) / n;
    s.empirical_p_cc = double(controls) / n;
    const std::size_t clean = records.size() - errors;
    s.mean_efficiency_no_ae = clean ? eta_sum / double(clean) : 0.0;
    std::sort(s.goodput_cdf_samples.begin(), s.goodput_cdf_samples.end());
    std::sort(s.actual_snr_samples.begin(), s.actual_snr_samples.end());
    std::sort(s.estimated_snr_samples.begin(), s.estimated_snr_samples.end());
    return s;
}

} // namespace

experiment::experiment(simulation_params params) : params_(std::move(params))
{
    params_.frame.validate();
    if (params_.par == paradigm::oce && params_.frame.optimization_ttis < 1)
        throw config_error("A must be at least 1 for the OCE paradigm");
    if (!(params_.lambda_u > 0.0))
        throw config_error("lambda_u must be positive");
    if (!(params_.lambda_r > 0.0))
        throw config_error("lambda_r must be positive");
    if (!std::isfinite(params_.gamma0_fixed_db) || !std::isfinite(params_.gamma0_flexible_db))
        throw config_error("target SNRs must be finite");
    if (params_.bsw_fixed_stride == 0)
        throw config_error("bsw_fixed_stride must be at least 1");
    for (double bw : {params_.radio.bandwidth_data_hz, params_.radio.bandwidth_cc_ue_hz,
                      params_.radio.bandwidth_cc_ris_hz})
        if (!(bw > 0.0))
            throw config_error("bandwidths must be positive");

    geo_ = geometry::square_grid(params_.n_elements, params_.carrier_frequency_hz,
                                 params_.bs_position, params_.ue_corner_a, params_.ue_corner_b,
                                 params_.element_spacing_m);
    pilot_length_ = risctl::pilot_length(params_.frame);

    const std::size_t card = params_.cardinality_ce ? params_.cardinality_ce : params_.n_elements;
    ce_book_ = std::make_shared<const codebook>(dft_codebook(params_.n_elements, card));
    fixed_book_ = std::make_shared<const codebook>(
        subsample(*ce_book_, params_.bsw_fixed_stride).relabeled(codebook_kind::beam_sweeping_fixed));
}

const codebook& experiment::codebook_for(paradigm p) const
{
    return p == paradigm::bsw_fixed ? *fixed_book_ : *ce_book_;
}

std::array<packet_budget, 4> experiment::budgets(paradigm p) const
{
    return make_budgets(p, params_.bits, params_.n_elements, codebook_for(p).size(), params_.frame,
                        params_.radio);
}

double experiment::gamma0(paradigm p) const
{
    return db_to_linear(p == paradigm::bsw_flexible ? params_.gamma0_flexible_db
                                                    : params_.gamma0_fixed_db);
}

experiment experiment::with_paradigm(paradigm p) const
{
    if (p == paradigm::oce && params_.frame.optimization_ttis < 1)
        throw config_error("A must be at least 1 for the OCE paradigm");
    experiment e = *this;
    e.params_.par = p;
    return e;
}

experiment experiment::with_cc_kind(cc_kind k) const
{
    experiment e = *this;
    e.params_.cc = k;
    return e;
}

experiment experiment::with_frame_duration(nanos tau) const
{
    experiment e = *this;
    e.params_.frame.tau = tau;
    e.params_.frame.validate();
    return e;
}

experiment experiment::with_gamma0_db(paradigm p, double gamma0_db) const
{
    if (!std::isfinite(gamma0_db))
        throw config_error("target SNR must be finite");
    experiment e = *this;
    (p == paradigm::bsw_flexible ? e.params_.gamma0_flexible_db : e.params_.gamma0_fixed_db) =
        gamma0_db;
    return e;
}

experiment experiment::with_lambdas(double lambda_u, double lambda_r) const
{
    if (!(lambda_u > 0.0) || !(lambda_r > 0.0))
        throw config_error("mean control-channel SNRs must be positive");
    experiment e = *this;
    e.params_.lambda_u = lambda_u;
    e.params_.lambda_r = lambda_r;
    return e;
}

bool trial_result::algorithmic_error() const
{
    return outcome_error(outcome);
}

double trial_result::spectral_efficiency() const
{
    return outcome_efficiency(outcome);
}

link_outcome simulate_link(const experiment& exp, const channel_realization& channel,
                           random_stream& pilot_rng)
{
    const auto& prm = exp.params();
    const auto& cb = exp.codebook_for(prm.par);
    switch (prm.par) {
    case paradigm::oce:
        return run_oce(channel, cb, prm.radio, exp.pilot_length(), pilot_rng, prm.ae);
    case paradigm::bsw_fixed:
        return run_bsw(channel, cb, prm.radio, exp.pilot_length(), exp.gamma0(prm.par),
                       frame_kind::fixed, pilot_rng);
    case paradigm::bsw_flexible:
        return run_bsw(channel, cb, prm.radio, exp.pilot_length(), exp.gamma0(prm.par),
                       frame_kind::flexible, pilot_rng);
    }
    throw contract_error("unknown paradigm");
}

frame_timing timing_for(const experiment& exp, const link_outcome& outcome, nanos tau)
{
    const auto& prm = exp.params();
    frame_params frame = prm.frame;
    frame.tau = tau;
    const std::size_t card = exp.codebook_for(prm.par).size();
    std::optional<std::size_t> c_star;
    if (prm.par == paradigm::bsw_flexible) {
        const auto& bsw = std::get<bsw_outcome>(outcome);
        // an unsuccessful sweep still spent (2C - 1) TTIs
        c_star = bsw.selected_one_based().value_or(card);
    }
    return compute_timing(prm.par, prm.cc, frame, card, c_star);
}

double goodput(const experiment& exp, const link_outcome& outcome, bool control_success,
               nanos tau)
{
    if (!control_success || outcome_error(outcome))
        return 0.0;
    const auto t = timing_for(exp, outcome, tau);
    if (t.payload <= nanos::zero())
        return 0.0;
    return double(t.payload.count()) / double(tau.count()) * exp.params().radio.bandwidth_data_hz *
           outcome_efficiency(outcome);
}

namespace {

struct link_and_control {
    link_outcome outcome;
    bool control_success = false;
};

link_and_control simulate_trial(const experiment& exp, std::uint64_t trial_index,
                                std::uint64_t master_seed)
{
    const auto& prm = exp.params();
    random_stream position_rng(master_seed, trial_index, stream_tag::position);
    random_stream pilot_rng(master_seed, trial_index, stream_tag::pilot_noise);
    random_stream control_rng(master_seed, trial_index, stream_tag::control);

    const double lambda_r = prm.cc == cc_kind::obcc ? infinity : prm.lambda_r;
    const auto channel = draw_channel(position_rng, exp.geo(), prm.lambda_u, lambda_r);
    link_and_control out{simulate_link(exp, channel, pilot_rng), false};
    const auto budgets = exp.budgets(prm.par);
    out.control_success =
        sample_control_success(control_rng, prm.cc, budgets, channel.lambda_u, channel.lambda_r);
    return out;
}

} // namespace

trial_result run_trial(const experiment& exp, std::uint64_t trial_index,
                       std::uint64_t master_seed)
{
    auto lc = simulate_trial(exp, trial_index, master_seed);
    trial_result r{std::move(lc.outcome), {}, lc.control_success, 0.0};
    const nanos tau = exp.params().frame.tau;
    r.timing = timing_for(exp, r.outcome, tau);
    r.goodput_bps = goodput(exp, r.outcome, r.control_success, tau);
    return r;
}

unsigned resolve_threads(unsigned threads)
{
    if (threads > 0)
        return threads;
    if (const char* env = std::getenv("RISCTL_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

experiment_summary run_experiment(const experiment& exp, std::size_t n_trials,
                                  std::uint64_t master_seed, unsigned threads)
{
    if (n_trials == 0)
        throw config_error("n_trials must be at least 1");
    std::vector<trial_record> records(n_trials);
    parallel_for(n_trials, resolve_threads(threads), [&](std::size_t i) {
        const auto r = run_trial(exp, i, master_seed);
        records[i] = make_record(r.outcome, r.control_success, r.goodput_bps);
    });
    return summarize(records, master_seed);
}

std::vector<experiment_summary> sweep_frame_duration(const experiment& exp,
                                                     std::span<const nanos> taus,
                                                     std::size_t n_trials,
                                                     std::uint64_t master_seed, unsigned threads)
{
    if (n_trials == 0)
        throw config_error("n_trials must be at least 1");
    if (taus.empty())
        throw config_error("frame-duration grid is empty");
    for (const nanos tau : taus)
        (void)exp.with_frame_duration(tau); // validates

    const std::size_t n_tau = taus.size();
    std::vector<trial_record> records(n_trials * n_tau);
    parallel_for(n_trials, resolve_threads(threads), [&](std::size_t i) {
        const auto lc = simulate_trial(exp, i, master_seed);
        for (std::size_t k = 0; k < n_tau; ++k)
            records[k * n_trials + i] =
                make_record(lc.outcome, lc.control_success,
                            goodput(exp, lc.outcome, lc.control_success, taus[k]));
    });

    std::vector<experiment_summary> out;
    out.reserve(n_tau);
    for (std::size_t k = 0; k < n_tau; ++k)
        out.push_back(summarize(std::span(records).subspan(k * n_trials, n_trials), master_seed));
    return out;
}

calibration_result calibrate_gamma0(const experiment& exp, std::span<const double> gamma0_grid_db,
                                    std::size_t n_trials, std::uint64_t master_seed,
                                    unsigned threads)
{
    const paradigm par = exp.params().par;
    if (!is_bsw(par))
        throw contract_error("target-SNR calibration needs a beam-sweeping paradigm");
    if (gamma0_grid_db.empty())
        throw config_error("target-SNR grid is empty");

    calibration_result out;
    double best = -1.0;
    for (const double g : gamma0_grid_db) {
        const auto summary = run_experiment(exp.with_gamma0_db(par, g), n_trials, master_seed, threads);
        out.table.emplace_back(g, summary.mean_goodput_bps);
        const bool better = summary.mean_goodput_bps > best ||
                            (summary.mean_goodput_bps == best && g < out.best_gamma0_db);
        if (better) {
            best = summary.mean_goodput_bps;
            out.best_gamma0_db = g;
        }
    }
    return out;
}

std::pair<std::vector<double>, std::vector<double>>
sweep_snr_samples(const experiment& exp, std::size_t n_trials, std::uint64_t master_seed,
                  unsigned threads)
{
    if (n_trials == 0)
        throw config_error("n_trials must be at least 1");
    const experiment bsw = is_bsw(exp.params().par) ? exp : exp.with_paradigm(paradigm::bsw_fixed);
    std::vector<bsw_outcome> outcomes(n_trials);
    parallel_for(n_trials, resolve_threads(threads), [&](std::size_t i) {
        auto lc = simulate_trial(bsw, i, master_seed);
        outcomes[i] = std::get<bsw_outcome>(std::move(lc.outcome));
    });
    std::pair<std::vector<double>, std::vector<double>> out;
    for (const auto& o : outcomes) {
        out.first.insert(out.first.end(), o.swept_actuals.begin(), o.swept_actuals.end());
        out.second.insert(out.second.end(), o.swept_estimates.begin(), o.swept_estimates.end());
    }
    return out;
}

double utility_closed_form(double p_cc, double p_ae, const frame_timing& timing, nanos tau,
                           double bandwidth_data_hz, double eta)
{
    if (!(p_cc >= 0.0 && p_cc <= 1.0) || !(p_ae >= 0.0 && p_ae <= 1.0))
        throw config_error("probabilities must lie in [0, 1]");
    if (tau <= nanos::zero())
        throw config_error("tau must be positive");
    const double factor = 1.0 - double(timing.overhead().count()) / double(tau.count());
    if (factor <= 0.0)
        return 0.0;
    return p_cc * (1.0 - p_ae) * factor * bandwidth_data_hz * eta;
}

} // namespace risctl
