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

// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit if any fails.
// Optional argument: path to the risctl executable for the command-line determinism check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "risctl/commands.hpp"
#include "risctl/config.hpp"
#include "risctl/engine.hpp"

using namespace risctl;
using namespace std::chrono_literals;

namespace {

struct verdict {
    bool pass = false;
    std::string detail;
};

struct criterion {
    int id;
    const char* title;
    double time_limit_s; // 0: none
    std::function<verdict()> run;
};

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& csv)
{
    std::vector<std::vector<std::string>> out;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line); // schema
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        out.push_back(cells);
    }
    return out;
}

double parse_cell(const std::string& s)
{
    if (s == "inf")
        return infinity;
    if (s == "-inf")
        return -infinity;
    return std::stod(s);
}

// 1
verdict reliability_threshold()
{
    const auto cfg = parse_config("paradigm = oce\ncc_kind = obcc\ntarget_pcc = 0.99\n");
    const auto rows = csv_rows(cmd_reliability(cfg, {}).render());
    if (rows.size() != 1)
        return {false, "expected a single row"};
    const double db = parse_cell(rows[0][0]);
    return {db >= 10.3 && db <= 10.6, fmt("min lambda_u = %.4f dB (window [10.3, 10.6])", db)};
}

// 2
verdict control_monte_carlo()
{
    auto cfg = parse_config("paradigm = oce\ncc_kind = obcc\n");
    cfg.sim.lambda_u = 11.03;
    const std::size_t n = 100000;
    const auto s = run_experiment(experiment(cfg.sim), n, 2024);
    const double target = 0.99;
    const double se = std::sqrt(target * (1 - target) / double(n));
    const double dev = std::abs(s.empirical_p_cc - target);
    return {dev <= 3 * se,
            fmt("empirical p_cc = %.5f over %zu trials, |dev| = %.2e, 3 SE = %.2e", s.empirical_p_cc,
                n, dev, 3 * se)};
}

// 3
verdict frontier_ordering()
{
    command_options opt;
    opt.lambda_u_db = parse_range("0:40:0.25");
    auto cfg = parse_config("cc_kind = ibcc\ntarget_pcc = 0.99\n");
    cfg.sim.par = paradigm::oce;
    const auto oce = csv_rows(cmd_reliability(cfg, opt).render());
    cfg.sim.par = paradigm::bsw_fixed;
    const auto bsw = csv_rows(cmd_reliability(cfg, opt).render());
    std::size_t both = 0, bsw_only = 0, oce_only = 0, violations = 0;
    double min_gap_db = infinity;
    for (std::size_t i = 0; i < oce.size(); ++i) {
        const bool fo = oce[i][2] == "1", fb = bsw[i][2] == "1";
        if (fo && fb) {
            ++both;
            const double gap = parse_cell(oce[i][1]) - parse_cell(bsw[i][1]);
            min_gap_db = std::min(min_gap_db, gap);
            violations += !(gap > 0.0);
        } else if (fb) {
            ++bsw_only; // OCE needs an unbounded lambda_r here
        } else if (fo) {
            ++oce_only;
        }
    }
    const bool pass = both > 0 && violations == 0 && oce_only == 0;
    return {pass, fmt("%zu grid points feasible for both (min gap %.3f dB), %zu BSW-only, %zu OCE-only",
                      both, min_gap_db, bsw_only, oce_only)};
}

// 4
verdict codebook_and_estimator()
{
    std::vector<std::string> bad;
    const std::size_t n_el = 100;
    const auto cb = dft_codebook(n_el, n_el);

    double gram = 0;
    for (std::size_t a = 0; a < n_el; ++a)
        for (std::size_t b = 0; b < n_el; ++b) {
            std::complex<double> s = 0;
            for (std::size_t c = 0; c < n_el; ++c)
                s += std::conj(cb[c][a]) * cb[c][b];
            gram = std::max(gram, std::abs(s - (a == b ? double(n_el) : 0.0)));
        }
    if (!(gram < 1e-9))
        bad.push_back("gram");

    const auto geo = geometry::square_grid(100, 3e9, {25, 5, 5}, {-10, 0, 0}, {10, 20, -20});
    const radio_params radio;
    double ls_rel = 0;
    double align_rel = 0;
    double worst_margin = infinity;
    random_stream rng(4, 0, stream_tag::user);
    for (std::uint64_t t = 0; t < 100; ++t) {
        random_stream pos(4, t, stream_tag::position);
        const auto ch = draw_channel(pos, geo, infinity, infinity);
        cvec y(n_el);
        for (std::size_t c = 0; c < n_el; ++c)
            y[c] = combined_channel(cb[c], ch.z_d);
        const auto zh = ls_estimate(y, cb);
        double err = 0, nrm = 0, sum_abs = 0;
        for (std::size_t k = 0; k < n_el; ++k) {
            err += std::norm(zh[k] - ch.z_d[k]);
            nrm += std::norm(ch.z_d[k]);
            sum_abs += std::abs(ch.z_d[k]);
        }
        ls_rel = std::max(ls_rel, std::sqrt(err / nrm));

        const auto phi = optimal_config(ch.z_d);
        const double g = std::norm(combined_channel(phi, ch.z_d));
        align_rel = std::max(align_rel, std::abs(g - sum_abs * sum_abs) / (sum_abs * sum_abs));
        std::vector<double> ang(n_el);
        for (int k = 0; k < 1000; ++k) {
            for (auto& a : ang)
                a = rng.uniform(0.0, 2 * std::numbers::pi);
            const double r = std::norm(combined_channel(configuration::from_angles(ang), ch.z_d));
            worst_margin = std::min(worst_margin, (g - r) / g);
        }
    }
    if (!(ls_rel < 1e-10))
        bad.push_back("noiseless LS");
    if (!(align_rel < 1e-12))
        bad.push_back("phase alignment");
    if (!(worst_margin >= 0.0))
        bad.push_back("domination");

    // estimator noise on one fixed channel, reference powers, p = 1
    random_stream pos(4, 1000, stream_tag::position);
    const auto ch = draw_channel(pos, geo, infinity, infinity);
    const double expect = radio.sigma_b2() / (1.0 * radio.rho_u() * double(n_el));
    std::vector<double> var(n_el, 0.0);
    const int reps = 10000;
    cvec y(n_el);
    random_stream noise(4, 0, stream_tag::pilot_noise);
    for (int r = 0; r < reps; ++r) {
        for (std::size_t c = 0; c < n_el; ++c)
            y[c] = pilot_observation(ch.z_d, cb[c], radio.rho_u(), radio.sigma_b2(), 1, noise);
        const auto zh = ls_estimate(y, cb);
        for (std::size_t k = 0; k < n_el; ++k)
            var[k] += std::norm(zh[k] - ch.z_d[k]) / reps;
    }
    double worst_var = 0;
    for (double v : var)
        worst_var = std::max(worst_var, std::abs(v / expect - 1.0));
    if (!(worst_var < 0.05))
        bad.push_back("LS noise variance");

    std::string detail = fmt("gram %.1e, LS rel %.1e, alignment rel %.1e, min domination margin %.3f, "
                             "worst LS variance deviation %.2f%%",
                             gram, ls_rel, align_rel, worst_margin, 100 * worst_var);
    for (const auto& b : bad)
        detail += "; failed: " + b;
    return {bad.empty(), detail};
}

// 5
verdict timing_identities()
{
    random_stream rng(5, 0, stream_tag::user);
    std::size_t checked = 0, broken = 0;
    for (int k = 0; k < 50; ++k) {
        const nanos tti = from_seconds(rng.uniform(1e-4, 1e-3));
        const nanos guard = from_seconds(to_seconds(tti) * rng.uniform(0.01, 0.5));
        const nanos tau = from_seconds(rng.uniform(0.02, 0.3));
        const frame_params f{tau, tti, guard, unsigned(rng.uniform(1, 8)), std::nullopt, 1u};
        const std::size_t card = 1 + std::size_t(rng.uniform(0, 120));
        const std::size_t c_star = 1 + std::size_t(rng.uniform(0, double(card)));
        for (auto p : {paradigm::oce, paradigm::bsw_fixed, paradigm::bsw_flexible})
            for (auto kind : {cc_kind::obcc, cc_kind::ibcc}) {
                const auto t = compute_timing(p, kind, f, card, c_star);
                if (t.payload > nanos::zero()) {
                    ++checked;
                    broken += t.setup + t.algorithmic + t.ack + t.payload != tau;
                }
            }
    }
    const auto cfg = parse_config("");
    const experiment e(cfg.sim);
    const auto t = compute_timing(paradigm::oce, cc_kind::obcc, cfg.sim.frame, 100);
    const bool exact = t.overhead() == nanos(53550us);
    const auto g50 = run_experiment(e.with_frame_duration(50ms), 200, 5);
    const auto g60 = run_experiment(e.with_frame_duration(60ms), 200, 5);
    const bool pass = broken == 0 && checked > 0 && exact && g50.mean_goodput_bps == 0.0 &&
                      g60.mean_goodput_bps > 0.0;
    return {pass, fmt("%zu/%zu phase sums exact, OCE/OBCC overhead %.2f ms, goodput %.0f bit/s at 50 ms, "
                      "%.0f bit/s at 60 ms",
                      checked - broken, checked, to_ms(t.overhead()), g50.mean_goodput_bps,
                      g60.mean_goodput_bps)};
}

// 6
verdict chebyshev_bound_check()
{
    auto cfg = parse_config("paradigm = bsw-fixed\ngamma0_fixed_db = 10.9\np = 1\n");
    const experiment e(cfg.sim);
    const double g0 = e.gamma0(paradigm::bsw_fixed);
    const std::size_t n = 100000;
    struct sample {
        double excess;
        bool over;
    };
    std::vector<sample> samples;
    for (std::uint64_t t = 0; t < n; ++t) {
        const auto r = run_trial(e, t, 6);
        const auto& b = std::get<bsw_outcome>(r.outcome);
        if (b.selected_index && *b.estimated_snr > g0)
            samples.push_back({*b.estimated_snr - g0, b.error_kind == bsw_error::overestimation});
    }
    std::sort(samples.begin(), samples.end(), [](auto& a, auto& b) { return a.excess < b.excess; });
    const std::size_t m = samples.size();
    if (m < 1000)
        return {false, fmt("only %zu selections", m)};
    int worst_bucket = -1;
    double worst_slack = infinity;
    std::string table;
    for (int d = 0; d < 10; ++d) {
        const std::size_t lo = m * d / 10, hi = m * (d + 1) / 10;
        std::size_t over = 0;
        for (std::size_t i = lo; i < hi; ++i)
            over += samples[i].over;
        const double f = double(over) / double(hi - lo);
        const double se = std::sqrt(f * (1 - f) / double(hi - lo));
        const double bound = chebyshev_bound(g0 + samples[lo].excess, g0, 1);
        const double slack = bound + 3 * se - f;
        if (slack < worst_slack) {
            worst_slack = slack;
            worst_bucket = d;
        }
        table += fmt(" %.3f/%.3f", f, bound);
    }
    return {worst_slack >= 0.0, fmt("%zu selections; per-decile frequency/bound:%s; tightest decile %d "
                                    "slack %.3f",
                                    m, table.c_str(), worst_bucket, worst_slack)};
}

// 7
verdict paradigm_crossover()
{
    const auto cfg = parse_config("");
    const experiment e(cfg.sim);
    const std::size_t n = 10000;
    const std::uint64_t seed = 7;
    std::vector<nanos> taus;
    for (int ms = 30; ms <= 150; ++ms)
        taus.push_back(std::chrono::milliseconds(ms));
    const auto oce = sweep_frame_duration(e.with_paradigm(paradigm::oce), taus, n, seed);
    const auto fix = sweep_frame_duration(e.with_paradigm(paradigm::bsw_fixed), taus, n, seed);
    const auto fle = sweep_frame_duration(e.with_paradigm(paradigm::bsw_flexible), taus, n, seed);
    const std::size_t last = taus.size() - 1;

    const bool low = fix[0].mean_goodput_bps > 0.0 && oce[0].mean_goodput_bps == 0.0;
    const bool high = oce[last].mean_goodput_bps > fix[last].mean_goodput_bps &&
                      oce[last].mean_goodput_bps > fle[last].mean_goodput_bps;
    // first duration from which OCE stays ahead of both sweeps
    std::size_t cross = taus.size();
    for (std::size_t k = taus.size(); k-- > 0;) {
        const double best_bsw = std::max(fix[k].mean_goodput_bps, fle[k].mean_goodput_bps);
        if (oce[k].mean_goodput_bps > best_bsw)
            cross = k;
        else
            break;
    }
    const double cross_ms = cross < taus.size() ? to_ms(taus[cross]) : infinity;
    const bool window = cross_ms >= 55.0 && cross_ms <= 95.0;
    return {low && high && window,
            fmt("30 ms: OCE %.0f, fixed %.0f bit/s; 150 ms: OCE %.0f, fixed %.0f, flexible %.0f bit/s; "
                "crossover at %.0f ms",
                oce[0].mean_goodput_bps, fix[0].mean_goodput_bps, oce[last].mean_goodput_bps,
                fix[last].mean_goodput_bps, fle[last].mean_goodput_bps, cross_ms)};
}

// 8
verdict calibration_stability()
{
    const auto cfg = parse_config("");
    const experiment e(cfg.sim);
    std::vector<double> grid;
    for (int i = 0; i < 20; ++i)
        grid.push_back(4.0 + 1.0 * i);
    const std::size_t n = 10000;
    const auto fixed = e.with_paradigm(paradigm::bsw_fixed);
    const auto f30 = calibrate_gamma0(fixed.with_frame_duration(30ms), grid, n, 8);
    const auto f90 = calibrate_gamma0(fixed.with_frame_duration(90ms), grid, n, 8);
    const auto flex = e.with_paradigm(paradigm::bsw_flexible);
    const auto x30 = calibrate_gamma0(flex.with_frame_duration(30ms), grid, n, 8);
    const auto x90 = calibrate_gamma0(flex.with_frame_duration(90ms), grid, n, 8);
    const double spread = std::abs(f30.best_gamma0_db - f90.best_gamma0_db);
    auto near = [](double v, double lo, double hi) { return v >= lo - 3 && v <= hi + 3; };
    const std::string info = fmt(
        "informational: fixed optimum %s the 10.9 dB reference +-3 dB; flexible optima %.1f/%.1f dB "
        "%s 12.4-13.8 dB +-3 dB",
        near(f30.best_gamma0_db, 10.9, 10.9) ? "within" : "outside", x30.best_gamma0_db,
        x90.best_gamma0_db,
        near(x30.best_gamma0_db, 12.4, 13.8) && near(x90.best_gamma0_db, 12.4, 13.8) ? "within"
                                                                                     : "outside");
    return {spread <= 1.0, fmt("fixed-frame optimum %.1f dB at 30 ms, %.1f dB at 90 ms (spread %.1f dB); ",
                               f30.best_gamma0_db, f90.best_gamma0_db, spread) +
                               info};
}

// 9
std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string cli_path;

verdict determinism()
{
    std::vector<std::string> mismatches;
    auto cfg = parse_config("lambda_u_db = 11\n");
    cfg.n_trials = 400;
    command_options opt;
    opt.tau_ms = {30, 60, 150};
    opt.gamma0_db = {8, 10.9, 13};
    opt.one_minus_pcc = {0.001, 0.01, 0.1};
    opt.lambda_u_db = {10, 20, 30};

    auto all = [&](const experiment_config& c) {
        auto bsw = c;
        bsw.sim.par = paradigm::bsw_fixed;
        auto ibcc = c;
        ibcc.sim.cc = cc_kind::ibcc;
        return std::vector<std::string>{cmd_snr_cdf(c, opt).render(), cmd_goodput_sweep(c, opt).render(),
                                        cmd_calibrate(bsw, opt).render(), cmd_utility(c, opt).render(),
                                        cmd_reliability(ibcc, opt).render()};
    };
    setenv("RISCTL_THREADS", "1", 1);
    const auto a = all(cfg);
    const auto b = all(cfg);
    setenv("RISCTL_THREADS", "4", 1);
    const auto c = all(cfg);
    unsetenv("RISCTL_THREADS");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i] || a[i] != c[i])
            mismatches.push_back("in-process command " + std::to_string(i));

    std::size_t cli_runs = 0;
    if (!cli_path.empty()) {
        const std::vector<std::string> commands = {
            "snr-cdf --trials 200",
            "goodput-sweep --trials 300 --tau-ms 30:150:40",
            "calibrate --trials 300 --gamma0-db 8:14:2",
            "utility --trials 300 --one-minus-pcc 0.001,0.1",
            "reliability --lambda-u-db 5:30:5",
        };
        const std::string cfg_path = "acceptance_cli.cfg";
        {
            std::ofstream out(cfg_path);
            out << "paradigm = bsw-fixed\ncc_kind = ibcc\nlambda_u_db = 12\nlambda_r_db = 25\n";
        }
        for (std::size_t i = 0; i < commands.size(); ++i) {
            std::string outputs[3];
            const char* threads[3] = {"1", "1", "3"};
            for (int r = 0; r < 3; ++r) {
                const std::string out = "acceptance_cli_" + std::to_string(i) + "_" + std::to_string(r) + ".csv";
                const std::string cmd = "RISCTL_THREADS=" + std::string(threads[r]) + " \"" + cli_path +
                                        "\" " + commands[i] + " --config " + cfg_path + " --seed 99 --out " + out;
                if (std::system(cmd.c_str()) != 0)
                    mismatches.push_back("cli failed: " + commands[i]);
                outputs[r] = read_file(out);
                std::remove(out.c_str());
                ++cli_runs;
            }
            if (outputs[0].empty() || outputs[0] != outputs[1] || outputs[0] != outputs[2])
                mismatches.push_back("cli " + commands[i]);
        }
        std::remove(cfg_path.c_str());
    }
    std::string detail = fmt("5 commands in process at 1/1/4 threads, %zu command-line runs at 1/1/3 threads",
                             cli_runs);
    for (const auto& m : mismatches)
        detail += "; differs: " + m;
    return {mismatches.empty(), detail};
}

} // namespace

int main(int argc, char** argv)
{
    if (argc > 1)
        cli_path = argv[1];

    const std::vector<criterion> criteria = {
        {1, "analytic reliability threshold", 1.0, reliability_threshold},
        {2, "closed-form vs Monte Carlo control reliability", 10.0, control_monte_carlo},
        {3, "reliability frontier ordering", 1.0, frontier_ordering},
        {4, "codebook and estimator properties", 0.0, codebook_and_estimator},
        {5, "timing identities", 0.0, timing_identities},
        {6, "BSW Chebyshev bound", 30.0, chebyshev_bound_check},
        {7, "paradigm crossover", 0.0, paradigm_crossover},
        {8, "target-SNR calibration stability", 0.0, calibration_stability},
        {9, "determinism", 0.0, determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string timing = fmt("%.2f s", secs);
        if (c.time_limit_s > 0) {
            timing += fmt(" (limit %.0f s)", c.time_limit_s);
            if (secs > c.time_limit_s) {
                v.pass = false;
                timing += " over limit";
            }
        }
        failures += !v.pass;
        std::cout << "criterion " << c.id << ": " << (v.pass ? "PASS" : "FAIL") << " - " << c.title
                  << " - " << v.detail << " [" << timing << "]" << std::endl;
    }
    std::cout << (failures ? "acceptance: FAIL" : "acceptance: PASS") << " (" << 9 - failures
              << "/9 criteria)" << std::endl;
    return failures ? 1 : 0;
}
