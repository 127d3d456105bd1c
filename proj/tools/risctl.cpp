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

// risctl command-line front end: subcommands write one CSV each.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "risctl/codebook.hpp"
#include "risctl/commands.hpp"
#include "risctl/config.hpp"

namespace {

struct cli_state {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::string> out;
    std::optional<double> target;
    std::optional<std::string> tau_ms;
    std::optional<std::string> gamma0_db;
    std::optional<std::string> lambda_u_db;
    std::optional<std::string> one_minus_pcc;
    std::string paradigms;
    unsigned threads = 0;
};

risctl::experiment_config resolve_config(const cli_state& s)
{
    auto cfg = s.config_path.empty() ? risctl::parse_config("") : risctl::load_config(s.config_path);
    if (s.seed)
        cfg.master_seed = *s.seed;
    if (s.trials) {
        if (*s.trials == 0)
            throw risctl::config_error("--trials must be at least 1");
        cfg.n_trials = *s.trials;
    }
    if (s.out)
        cfg.output_path = *s.out;
    if (s.target) {
        if (!(*s.target > 0.0 && *s.target < 1.0))
            throw risctl::config_error("--target must lie in (0, 1)");
        cfg.target_pcc = *s.target;
    }
    return cfg;
}

risctl::command_options resolve_options(const cli_state& s)
{
    risctl::command_options opt;
    opt.threads = s.threads;
    if (s.tau_ms)
        opt.tau_ms = risctl::parse_range(*s.tau_ms);
    if (s.gamma0_db)
        opt.gamma0_db = risctl::parse_range(*s.gamma0_db);
    if (s.lambda_u_db)
        opt.lambda_u_db = risctl::parse_range(*s.lambda_u_db);
    if (s.one_minus_pcc)
        opt.one_minus_pcc = risctl::parse_range(*s.one_minus_pcc);
    std::string_view rest = s.paradigms;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        opt.paradigms.push_back(risctl::parse_paradigm(rest.substr(0, comma)));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    return opt;
}

void warn_about(const risctl::experiment_config& cfg)
{
    const risctl::experiment exp(cfg.sim);
    const auto card = exp.codebook_for(cfg.sim.par).size();
    if (cfg.sim.bits.b_conf < risctl::min_index_bits(card))
        std::cerr << "warning: b_conf = " << cfg.sim.bits.b_conf << " bits cannot index "
                  << card << " configurations\n";
}

void emit(const risctl::experiment_config& cfg, const risctl::csv_table& table)
{
    const std::string text = table.render();
    if (cfg.output_path.empty()) {
        std::cout << text;
        std::cout.flush();
        if (!std::cout)
            throw std::runtime_error("cannot write to standard output");
        return;
    }
    std::ofstream out(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open output file " + cfg.output_path);
    out << text;
    out.close();
    if (!out)
        throw std::runtime_error("cannot write output file " + cfg.output_path);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"risctl: control-aware link simulator for RIS-aided uplinks"};
    app.require_subcommand(0, 1);
    cli_state s;
    bool print_defaults = false;

    app.add_flag("--print-defaults", print_defaults, "Print every configuration key with its default");
    app.add_option("--config", s.config_path, "key = value configuration file");
    app.add_option("--seed", s.seed, "Master seed");
    app.add_option("--trials", s.trials, "Monte Carlo trials");
    app.add_option("--out", s.out, "Output CSV path (default: standard output)");
    app.add_option("--threads", s.threads, "Worker threads (default: RISCTL_THREADS or all cores)");

    auto* snr = app.add_subcommand("snr-cdf", "Actual and estimated SNR samples for OCE and BSW");
    auto* sweep = app.add_subcommand("goodput-sweep", "Mean goodput against frame duration");
    sweep->add_option("--tau-ms", s.tau_ms, "Frame durations in ms, start:stop:step or a,b,c");
    sweep->add_option("--paradigms", s.paradigms, "Comma list of oce, bsw-fixed, bsw-flexible");
    auto* calib = app.add_subcommand("calibrate", "Mean goodput against the BSW target SNR");
    calib->add_option("--gamma0-db", s.gamma0_db, "Target SNR grid in dB");
    auto* util = app.add_subcommand("utility", "Mean utility against the erroneous-control probability");
    util->add_option("--one-minus-pcc", s.one_minus_pcc, "Grid of 1 - p_cc values");
    auto* rel = app.add_subcommand("reliability", "Minimum control-channel SNRs for a reliability target");
    rel->add_option("--lambda-u-db", s.lambda_u_db, "UE control SNR grid in dB (IBCC)");
    rel->add_option("--target", s.target, "Target correct-control probability");

    for (auto* sub : {snr, sweep, calib, util, rel}) {
        sub->add_option("--config", s.config_path, "key = value configuration file");
        sub->add_option("--seed", s.seed, "Master seed");
        sub->add_option("--trials", s.trials, "Monte Carlo trials");
        sub->add_option("--out", s.out, "Output CSV path");
        sub->add_option("--threads", s.threads, "Worker threads");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? risctl::exit_ok : risctl::exit_config_error;
    }

    if (print_defaults) {
        std::cout << risctl::default_config_text();
        return risctl::exit_ok;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return risctl::exit_config_error;
    }

    risctl::experiment_config cfg;
    risctl::command_options opt;
    try {
        cfg = resolve_config(s);
        opt = resolve_options(s);
        warn_about(cfg);
    } catch (const risctl::config_error& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return risctl::exit_config_error;
    }

    try {
        const auto* sub = app.get_subcommands().front();
        risctl::csv_table table = sub == snr     ? risctl::cmd_snr_cdf(cfg, opt)
                                  : sub == sweep ? risctl::cmd_goodput_sweep(cfg, opt)
                                  : sub == calib ? risctl::cmd_calibrate(cfg, opt)
                                  : sub == util  ? risctl::cmd_utility(cfg, opt)
                                                 : risctl::cmd_reliability(cfg, opt);
        emit(cfg, table);
    } catch (const risctl::config_error& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return risctl::exit_config_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return risctl::exit_runtime_error;
    }
    return risctl::exit_ok;
}
