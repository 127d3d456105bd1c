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

#ifndef RISCTL_ERRORS_HPP
#define RISCTL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace risctl {

// Invalid or inconsistent configuration (bad parameter values, cross-field violations).
class config_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation (zero distance, t <= 0, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Vector or matrix dimensions do not agree.
class shape_error : public std::length_error {
public:
    using std::length_error::length_error;
};

// Caller violated a precondition that is not a configuration value.
class contract_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Estimation could not be carried out (e.g. the pilot codebook is not orthogonal).
class estimation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace risctl

#endif
