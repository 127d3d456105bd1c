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

#ifndef RISCTL_CONFIG_HPP
#define RISCTL_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "risctl/engine.hpp"
#include "risctl/errors.hpp"

namespace risctl {

struct experiment_config {
    simulation_params sim;
    std::size_t n_trials = 10000;
    std::uint64_t master_seed = 1;
    std::string output_path; // empty: standard output
    double target_pcc = 0.99;
};

// Parse error pointing at a key and line (line 0 for cross-field checks).
class config_parse_error : public config_error {
public:
    config_parse_error(const std::string& key, std::size_t line, const std::string& what);
    const std::string& key() const { return key_; }
    std::size_t line() const { return line_; }

private:
    std::string key_;
    std::size_t line_;
};

// `key = value` lines, `#` starts a comment. Unknown keys, bad values and
// inconsistent combinations throw config_parse_error. Keys ending in `_db`
// are stored linear.
experiment_config parse_config(std::string_view text);
experiment_config load_config(const std::filesystem::path& path);

// Every key with its default and unit, in a form parse_config accepts.
std::string default_config_text();

} // namespace risctl

#endif
