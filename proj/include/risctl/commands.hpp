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

#ifndef RISCTL_COMMANDS_HPP
#define RISCTL_COMMANDS_HPP

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "risctl/config.hpp"

namespace risctl {

inline constexpr int exit_ok = 0;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_runtime_error = 3;

// CSV with a `# schema=1` first line and a header row. Numbers use 9 significant digits.
class csv_table {
public:
    explicit csv_table(std::vector<std::string> columns);

    void add_row(std::vector<std::string> cells);
    const std::vector<std::string>& columns() const { return columns_; }
    std::size_t n_rows() const { return rows_.size(); }
    std::string render() const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

std::string format_number(double v);

// "start:stop:step" (inclusive stop), "a,b,c" or a single value. Malformed input
// or an empty grid throws config_error.
std::vector<double> parse_range(std::string_view text);

struct command_options {
    std::vector<double> tau_ms;         // goodput-sweep
    std::vector<double> gamma0_db;      // calibrate
    std::vector<double> lambda_u_db;    // reliability (IBCC)
    std::vector<double> one_minus_pcc;  // utility
    std::vector<paradigm> paradigms;    // goodput-sweep; empty: all three
    unsigned threads = 0;
};

// series,sample_snr_db  (oce_actual, oce_estimated, bsw_actual, bsw_estimated)
csv_table cmd_snr_cdf(const experiment_config& cfg, const command_options& opt);
// tau_ms,paradigm,cc_kind,mean_goodput_bps,empirical_p_ae
csv_table cmd_goodput_sweep(const experiment_config& cfg, const command_options& opt);
// gamma0_db,mean_goodput_bps
csv_table cmd_calibrate(const experiment_config& cfg, const command_options& opt);
// one_minus_pcc,mean_utility_bps
csv_table cmd_utility(const experiment_config& cfg, const command_options& opt);
// lambda_u_db,lambda_r_db_min,feasible
csv_table cmd_reliability(const experiment_config& cfg, const command_options& opt);

} // namespace risctl

#endif
