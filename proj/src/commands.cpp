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

#include "risctl/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

#include "risctl/control.hpp"
#include "risctl/units.hpp"

namespace risctl {

csv_table::csv_table(std::vector<std::string> columns) : columns_(std::move(columns))
{
    if (columns_.empty())
        throw contract_error("csv_table needs at least one column");
}

void csv_table::add_row(std::vector<std::string> cells)
{
    if (cells.size() != columns_.size())
        throw shape_error("csv row has " + std::to_string(cells.size()) + " cells, expected " +
                          std::to_string(columns_.size()));
    rows_.push_back(std::move(cells));
}

std::string csv_table::render() const
{
    std::string out = "# schema=1\n";
    auto put = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    put(columns_);
    for (const auto& r : rows_)
        put(r);
    return out;
}

std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

namespace {

double parse_number(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
        throw config_error("malformed range value '" + std::string(s) + "'");
    return v;
}

constexpr std::size_t max_grid_points = 1'000'000;

std::string snr_db(double linear)
{
    return format_number(linear > 0.0 ? linear_to_db(linear) : -infinity);
}

nanos tau_from_ms(double ms)
{
    if (!(ms > 0.0))
        throw config_error("frame durations must be positive");
    return from_seconds(ms * 1e-3);
}

} // namespace

std::vector<double> parse_range(std::string_view text)
{
    if (text.find(':') != std::string_view::npos) {
        const auto c1 = text.find(':');
        const auto c2 = text.find(':', c1 + 1);
        if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos)
            throw config_error("range must be start:stop:step");
        const double start = parse_number(text.substr(0, c1));
        const double stop = parse_number(text.substr(c1 + 1, c2 - c1 - 1));
        const double step = parse_number(text.substr(c2 + 1));
        if (!(step > 0.0))
            throw config_error("range step must be positive");
        if (stop < start)
            throw config_error("range is empty: stop < start");
        const double span = (stop - start) / step;
        if (span > double(max_grid_points))
            throw config_error("range has too many points");
        const auto n = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = start + double(i) * step;
        return out;
    }
    std::vector<double> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        out.push_back(parse_number(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

csv_table cmd_snr_cdf(const experiment_config& cfg, const command_options& opt)
{
    const experiment exp(cfg.sim);
    csv_table table({"series", "sample_snr_db"});

    const auto oce = run_experiment(exp.with_paradigm(paradigm::oce), cfg.n_trials,
                                    cfg.master_seed, opt.threads);
    for (double v : oce.actual_snr_samples)
        table.add_row({"oce_actual", snr_db(v)});
    for (double v : oce.estimated_snr_samples)
        table.add_row({"oce_estimated", snr_db(v)});

    auto [actual, estimated] = sweep_snr_samples(exp.with_paradigm(paradigm::bsw_fixed),
                                                 cfg.n_trials, cfg.master_seed, opt.threads);
    std::sort(actual.begin(), actual.end());
    std::sort(estimated.begin(), estimated.end());
    for (double v : actual)
        table.add_row({"bsw_actual", snr_db(v)});
    for (double v : estimated)
        table.add_row({"bsw_estimated", snr_db(v)});
    return table;
}

csv_table cmd_goodput_sweep(const experiment_config& cfg, const command_options& opt)
{
    const experiment exp(cfg.sim);
    std::vector<nanos> taus;
    if (opt.tau_ms.empty())
        taus.push_back(cfg.sim.frame.tau);
    for (double ms : opt.tau_ms)
        taus.push_back(tau_from_ms(ms));
    std::vector<paradigm> pars = opt.paradigms;
    if (pars.empty())
        pars = {paradigm::oce, paradigm::bsw_fixed, paradigm::bsw_flexible};

    std::vector<std::vector<experiment_summary>> per_paradigm;
    for (paradigm p : pars)
        per_paradigm.push_back(sweep_frame_duration(exp.with_paradigm(p), taus, cfg.n_trials,
                                                    cfg.master_seed, opt.threads));

    csv_table table({"tau_ms", "paradigm", "cc_kind", "mean_goodput_bps", "empirical_p_ae"});
    for (std::size_t k = 0; k < taus.size(); ++k)
        for (std::size_t j = 0; j < pars.size(); ++j)
            table.add_row({format_number(to_ms(taus[k])), to_string(pars[j]),
                           to_string(cfg.sim.cc), format_number(per_paradigm[j][k].mean_goodput_bps),
                           format_number(per_paradigm[j][k].empirical_p_ae)});
    return table;
}

csv_table cmd_calibrate(const experiment_config& cfg, const command_options& opt)
{
    if (!is_bsw(cfg.sim.par))
        throw config_error("calibrate needs paradigm bsw-fixed or bsw-flexible");
    const experiment exp(cfg.sim);
    std::vector<double> grid = opt.gamma0_db;
    if (grid.empty())
        grid = parse_range("-13:30:0.5");
    const auto result = calibrate_gamma0(exp, grid, cfg.n_trials, cfg.master_seed, opt.threads);
    csv_table table({"gamma0_db", "mean_goodput_bps"});
    for (const auto& [g, r] : result.table)
        table.add_row({format_number(g), format_number(r)});
    return table;
}

csv_table cmd_utility(const experiment_config& cfg, const command_options& opt)
{
    const experiment exp(cfg.sim);
    std::vector<double> grid = opt.one_minus_pcc;
    if (grid.empty())
        grid = {1e-4, 1e-3, 1e-2, 1e-1};
    const auto budgets = exp.budgets(cfg.sim.par);
    const std::span<const packet_budget> ue(budgets.data(), 2);
    const double total_load = excess_load(budgets);

    csv_table table({"one_minus_pcc", "mean_utility_bps"});
    for (double x : grid) {
        if (!(x >= 0.0 && x < 1.0))
            throw config_error("one_minus_pcc values must lie in [0, 1)");
        // Mean CC SNRs that put the closed-form control reliability exactly at 1 - x;
        // with IBCC both links share one mean SNR.
        double lambda_u = infinity;
        double lambda_r = infinity;
        if (x > 0.0) {
            if (cfg.sim.cc == cc_kind::obcc) {
                lambda_u = min_lambda_obcc(1.0 - x, ue);
            } else {
                lambda_u = lambda_r = total_load / -std::log1p(-x);
            }
            if (!(lambda_u > 0.0))
                lambda_u = infinity;
            if (!(lambda_r > 0.0))
                lambda_r = infinity;
        }
        const auto summary = run_experiment(exp.with_lambdas(lambda_u, lambda_r), cfg.n_trials,
                                            cfg.master_seed, opt.threads);
        table.add_row({format_number(x), format_number(summary.mean_goodput_bps)});
    }
    return table;
}

csv_table cmd_reliability(const experiment_config& cfg, const command_options& opt)
{
    const experiment exp(cfg.sim);
    const auto budgets = exp.budgets(cfg.sim.par);
    const std::span<const packet_budget> ue(budgets.data(), 2);
    const std::span<const packet_budget> ris(budgets.data() + 2, 2);

    csv_table table({"lambda_u_db", "lambda_r_db_min", "feasible"});
    if (cfg.sim.cc == cc_kind::obcc) {
        // error-free RIS link: any lambda_r works
        const double lu = min_lambda_obcc(cfg.target_pcc, ue);
        table.add_row({snr_db(lu), "-inf", "1"});
        return table;
    }
    std::vector<double> grid_db = opt.lambda_u_db;
    if (grid_db.empty())
        grid_db = parse_range("0:40:1");
    std::vector<double> grid(grid_db.size());
    std::transform(grid_db.begin(), grid_db.end(), grid.begin(), db_to_linear);
    const auto frontier = reliability_frontier(cfg.target_pcc, ue, ris, grid);
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        const auto& pt = frontier[i];
        table.add_row({format_number(grid_db[i]),
                       pt.lambda_r_min ? snr_db(*pt.lambda_r_min) : std::string("inf"),
                       pt.lambda_r_min ? "1" : "0"});
    }
    return table;
}

} // namespace risctl
