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

#include "risctl/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <system_error>

#include "risctl/units.hpp"

namespace risctl {

config_parse_error::config_parse_error(const std::string& key, std::size_t line,
                                       const std::string& what)
    : config_error(line ? "line " + std::to_string(line) + ", key '" + key + "': " + what
                        : (key.empty() ? what : "key '" + key + "': " + what)),
      key_(key), line_(line)
{
}

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double to_double(std::string_view v)
{
    v = trim(v);
    if (v == "inf" || v == "+inf")
        return infinity;
    if (v == "-inf")
        return -infinity;
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty() || std::isnan(out))
        throw config_error("not a number: '" + std::string(v) + "'");
    return out;
}

std::uint64_t to_u64(std::string_view v)
{
    v = trim(v);
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
        throw config_error("not a non-negative integer: '" + std::string(v) + "'");
    return out;
}

unsigned to_unsigned(std::string_view v)
{
    const auto out = to_u64(v);
    if (out > 0xffffffffu)
        throw config_error("integer out of range: '" + std::string(v) + "'");
    return static_cast<unsigned>(out);
}

vec3 to_vec3(std::string_view v)
{
    vec3 out{};
    std::size_t i = 0;
    while (true) {
        const auto comma = v.find(',');
        if (i == 3)
            throw config_error("expected three comma-separated numbers");
        out[i++] = to_double(v.substr(0, comma));
        if (!std::isfinite(out[i - 1]))
            throw config_error("coordinates must be finite");
        if (comma == std::string_view::npos)
            break;
        v.remove_prefix(comma + 1);
    }
    if (i != 3)
        throw config_error("expected three comma-separated numbers");
    return out;
}

double db_value(std::string_view v)
{
    const double db = to_double(v);
    return db == infinity ? infinity : db_to_linear(db);
}

double finite(double v)
{
    if (!std::isfinite(v))
        throw config_error("value must be finite");
    return v;
}

double positive(double v)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw config_error("value must be positive and finite");
    return v;
}

nanos duration(std::string_view v, double scale)
{
    return from_seconds(positive(to_double(v)) * scale);
}

using setter = std::function<void(experiment_config&, std::string_view)>;

const std::map<std::string, setter, std::less<>>& setters()
{
    static const std::map<std::string, setter, std::less<>> table = {
        // scenario
        {"n_elements", [](auto& c, auto v) { c.sim.n_elements = to_u64(v); }},
        {"carrier_frequency_hz", [](auto& c, auto v) { c.sim.carrier_frequency_hz = positive(to_double(v)); }},
        {"element_spacing_m", [](auto& c, auto v) { c.sim.element_spacing_m = finite(to_double(v)); }},
        {"bs_position_m", [](auto& c, auto v) { c.sim.bs_position = to_vec3(v); }},
        {"ue_region_lo_m", [](auto& c, auto v) { c.sim.ue_corner_a = to_vec3(v); }},
        {"ue_region_hi_m", [](auto& c, auto v) { c.sim.ue_corner_b = to_vec3(v); }},
        // radio
        {"rho_u_dbm", [](auto& c, auto v) { c.sim.radio.rho_u_dbm = finite(to_double(v)); }},
        {"rho_b_dbm", [](auto& c, auto v) { c.sim.radio.rho_b_dbm = finite(to_double(v)); }},
        {"sigma_b2_dbm", [](auto& c, auto v) { c.sim.radio.sigma_b2_dbm = finite(to_double(v)); }},
        {"sigma_u2_dbm", [](auto& c, auto v) { c.sim.radio.sigma_u2_dbm = finite(to_double(v)); }},
        {"sigma_r2_dbm", [](auto& c, auto v) { c.sim.radio.sigma_r2_dbm = finite(to_double(v)); }},
        {"bandwidth_data_hz", [](auto& c, auto v) { c.sim.radio.bandwidth_data_hz = positive(to_double(v)); }},
        {"bandwidth_cc_ue_hz", [](auto& c, auto v) { c.sim.radio.bandwidth_cc_ue_hz = positive(to_double(v)); }},
        {"bandwidth_cc_ris_hz", [](auto& c, auto v) { c.sim.radio.bandwidth_cc_ris_hz = positive(to_double(v)); }},
        {"pilot_noise", [](auto& c, auto v) {
             v = trim(v);
             if (v == "true" || v == "1")
                 c.sim.radio.pilot_noise = true;
             else if (v == "false" || v == "0")
                 c.sim.radio.pilot_noise = false;
             else
                 throw config_error("expected true or false");
         }},
        {"lambda_u_db", [](auto& c, auto v) { c.sim.lambda_u = db_value(v); }},
        {"lambda_r_db", [](auto& c, auto v) { c.sim.lambda_r = db_value(v); }},
        // paradigm
        {"paradigm", [](auto& c, auto v) { c.sim.par = parse_paradigm(trim(v)); }},
        {"cc_kind", [](auto& c, auto v) { c.sim.cc = parse_cc_kind(trim(v)); }},
        {"cardinality_ce", [](auto& c, auto v) { c.sim.cardinality_ce = to_u64(v); }},
        {"bsw_fixed_stride", [](auto& c, auto v) { c.sim.bsw_fixed_stride = to_u64(v); }},
        {"ae_mode", [](auto& c, auto v) { c.sim.ae = ae_mode::parse(std::string(trim(v))); }},
        {"gamma0_fixed_db", [](auto& c, auto v) { c.sim.gamma0_fixed_db = finite(to_double(v)); }},
        {"gamma0_flexible_db", [](auto& c, auto v) { c.sim.gamma0_flexible_db = finite(to_double(v)); }},
        // frame
        {"tau_ms", [](auto& c, auto v) { c.sim.frame.tau = duration(v, 1e-3); }},
        {"T_ms", [](auto& c, auto v) { c.sim.frame.tti = duration(v, 1e-3); }},
        {"tau_s_us", [](auto& c, auto v) { c.sim.frame.guard = duration(v, 1e-6); }},
        {"A", [](auto& c, auto v) { c.sim.frame.optimization_ttis = to_unsigned(v); }},
        {"T_n_us", [](auto& c, auto v) {
             if (trim(v) == "none")
                 c.sim.frame.symbol_period.reset();
             else
                 c.sim.frame.symbol_period = duration(v, 1e-6);
         }},
        {"p", [](auto& c, auto v) {
             if (trim(v) == "auto") {
                 c.sim.frame.pilot_override.reset();
                 return;
             }
             const unsigned p = to_unsigned(v);
             if (p == 0)
                 throw config_error("pilot length must be at least 1");
             c.sim.frame.pilot_override = p;
         }},
        // control
        {"b_id", [](auto& c, auto v) { c.sim.bits.b_id = to_unsigned(v); }},
        {"b_frame", [](auto& c, auto v) { c.sim.bits.b_frame = to_unsigned(v); }},
        {"b_guard", [](auto& c, auto v) { c.sim.bits.b_guard = to_unsigned(v); }},
        {"b_conf", [](auto& c, auto v) { c.sim.bits.b_conf = to_unsigned(v); }},
        {"b_se", [](auto& c, auto v) { c.sim.bits.b_se = to_unsigned(v); }},
        {"b_quant", [](auto& c, auto v) { c.sim.bits.b_quant = to_unsigned(v); }},
        {"target_pcc", [](auto& c, auto v) {
             const double t = to_double(v);
             if (!(t > 0.0 && t < 1.0))
                 throw config_error("target_pcc must lie in (0, 1)");
             c.target_pcc = t;
         }},
        // run
        {"n_trials", [](auto& c, auto v) {
             c.n_trials = to_u64(v);
             if (c.n_trials == 0)
                 throw config_error("n_trials must be at least 1");
         }},
        {"master_seed", [](auto& c, auto v) { c.master_seed = to_u64(v); }},
        {"output_path", [](auto& c, auto v) { c.output_path = std::string(trim(v)); }},
    };
    return table;
}

} // namespace

experiment_config parse_config(std::string_view text)
{
    experiment_config cfg;
    std::map<std::string, std::size_t, std::less<>> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[' && line.back() == ']')
            continue; // section headers only group keys

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw config_parse_error(std::string(line), line_no, "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        const auto it = setters().find(key);
        if (it == setters().end())
            throw config_parse_error(key, line_no, "unknown key");
        if (seen.count(key))
            throw config_parse_error(key, line_no, "duplicate key");
        seen.emplace(key, line_no);
        if (value.empty() && key != "output_path")
            throw config_parse_error(key, line_no, "missing value");
        try {
            it->second(cfg, value);
        } catch (const config_error& e) {
            throw config_parse_error(key, line_no, e.what());
        }
    }

    auto line_of = [&](const char* key) -> std::size_t {
        const auto it = seen.find(key);
        return it == seen.end() ? 0 : it->second;
    };
    const auto& f = cfg.sim.frame;
    if (f.guard >= f.tti) {
        const char* key = line_of("tau_s_us") ? "tau_s_us" : "T_ms";
        throw config_parse_error(key, line_of(key), "tau_s must be < T");
    }
    if (f.tau < f.tti)
        throw config_parse_error("tau_ms", line_of("tau_ms"), "tau must be >= T");
    if (cfg.sim.par == paradigm::oce && f.optimization_ttis < 1)
        throw config_parse_error("A", line_of("A"), "A must be at least 1 for the OCE paradigm");
    try {
        (void)experiment(cfg.sim);
    } catch (const config_error& e) {
        throw config_parse_error("", 0, e.what());
    }
    return cfg;
}

experiment_config load_config(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw config_error("cannot read configuration file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string default_config_text()
{
    return R"(# risctl configuration: every key with its default.
# Keys ending in _db take decibels and are stored linear; "inf" is accepted.

[scenario]
n_elements = 100                  # RIS elements, perfect square
carrier_frequency_hz = 3e9
element_spacing_m = 0             # 0: half wavelength
bs_position_m = 25,5,5            # RIS centred at the origin in the x-z plane
ue_region_lo_m = -10,0,0          # opposite corners of the UE box
ue_region_hi_m = 10,20,-20

[radio]
rho_u_dbm = 24                    # UE transmit power
rho_b_dbm = 24                    # BS transmit power
sigma_b2_dbm = -94                # noise power at the BS
sigma_u2_dbm = -94                # noise power at the UE
sigma_r2_dbm = -94                # noise power at the RIS controller
bandwidth_data_hz = 180e3         # B_d
bandwidth_cc_ue_hz = 900e3        # B_u
bandwidth_cc_ris_hz = 900e3       # B_r
pilot_noise = true                # false: noiseless pilot observations
lambda_u_db = inf                 # mean UE control-channel SNR
lambda_r_db = inf                 # mean RIS control-channel SNR (IBCC only)

[paradigm]
paradigm = oce                    # oce | bsw-fixed | bsw-flexible
cc_kind = obcc                    # obcc | ibcc
cardinality_ce = 0                # DFT codebook size, 0: n_elements
bsw_fixed_stride = 3              # fixed sweep keeps every stride-th DFT entry
ae_mode = negligible              # strict | negligible | margin:<dB>
gamma0_fixed_db = 10.9            # target SNR, fixed frame
gamma0_flexible_db = 12.4         # target SNR, flexible frame

[frame]
tau_ms = 60                       # frame duration
T_ms = 0.5                        # TTI
tau_s_us = 50                     # RIS switching time, < T
A = 5                             # TTIs for optimisation and feedback (OCE)
T_n_us = none                     # pilot symbol period; none: pilots set by p
p = 1                             # pilot length; auto: floor((T - tau_s) / T_n)

[control]
b_id = 8
b_frame = 16
b_guard = 16
b_conf = 8
b_se = 6
b_quant = 2
target_pcc = 0.99                 # reliability target for the reliability command

[run]
n_trials = 10000
master_seed = 1
output_path =                     # empty: standard output
)";
}

} // namespace risctl
