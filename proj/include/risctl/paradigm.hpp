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

#ifndef RISCTL_PARADIGM_HPP
#define RISCTL_PARADIGM_HPP

#include <string>
#include <string_view>

namespace risctl {

enum class paradigm { oce, bsw_fixed, bsw_flexible };

enum class cc_kind { obcc, ibcc };

// "oce" | "bsw-fixed" | "bsw-flexible"
paradigm parse_paradigm(std::string_view text);
std::string to_string(paradigm p);

// "obcc" | "ibcc"
cc_kind parse_cc_kind(std::string_view text);
std::string to_string(cc_kind k);

inline bool is_bsw(paradigm p) { return p != paradigm::oce; }

} // namespace risctl

#endif
