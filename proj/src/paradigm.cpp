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

#include "risctl/paradigm.hpp"

#include "risctl/errors.hpp"

namespace risctl {

paradigm parse_paradigm(std::string_view text)
{
    if (text == "oce")
        return paradigm::oce;
    if (text == "bsw-fixed")
        return paradigm::bsw_fixed;
    if (text == "bsw-flexible")
        return paradigm::bsw_flexible;
    throw config_error("unknown paradigm '" + std::string(text) +
                       "' (expected oce, bsw-fixed or bsw-flexible)");
}

std::string to_string(paradigm p)
{
    switch (p) {
    case paradigm::oce:
        return "oce";
    case paradigm::bsw_fixed:
        return "bsw-fixed";
    case paradigm::bsw_flexible:
        return "bsw-flexible";
    }
    return "?";
}

cc_kind parse_cc_kind(std::string_view text)
{
    if (text == "obcc")
        return cc_kind::obcc;
    if (text == "ibcc")
        return cc_kind::ibcc;
    throw config_error("unknown cc_kind '" + std::string(text) + "' (expected obcc or ibcc)");
}

std::string to_string(cc_kind k)
{
    return k == cc_kind::obcc ? "obcc" : "ibcc";
}

} // namespace risctl
