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

#include <doctest.h>

#include <chrono>

#include "risctl/errors.hpp"
#include "risctl/random.hpp"
#include "risctl/timing.hpp"

using namespace risctl;
using namespace std::chrono_literals;

namespace {

frame_params reference_frame(nanos tau = 60ms)
{
    return frame_params{tau, 500us, 50us, 5, std::nullopt, 1u};
}

} // namespace

TEST_CASE("setup phase")
{
    CHECK(setup_duration(cc_kind::obcc, 500us) == 500us);
    CHECK(setup_duration(cc_kind::ibcc, 500us) == 1500us);
    for (nanos t : {nanos(1), nanos(333), nanos(1234567)})
        CHECK(setup_duration(cc_kind::ibcc, t) == 3 * setup_duration(cc_kind::obcc, t));
}

TEST_CASE("acknowledgement phase")
{
    CHECK(ack_duration(cc_kind::obcc, 500us, 50us) == 550us);
    CHECK(ack_duration(cc_kind::ibcc, 500us, 50us) == 1550us);
    CHECK(ack_duration(cc_kind::ibcc, 500us, 0ns) == setup_duration(cc_kind::ibcc, 500us));
}

TEST_CASE("algorithmic phase")
{
    CHECK(algorithmic_duration(paradigm::oce, 500us, 100, 5) == 52500us);
    CHECK(algorithmic_duration(paradigm::bsw_fixed, 500us, 34, 5) == 17ms);
    CHECK(algorithmic_duration(paradigm::bsw_flexible, 500us, 100, 5, 1) == 500us);
    CHECK(algorithmic_duration(paradigm::bsw_flexible, 500us, 100, 5, 2) == 1500us);
    CHECK(algorithmic_duration(paradigm::bsw_flexible, 500us, 100, 5, 100) == 99500us);
    CHECK_THROWS_AS(algorithmic_duration(paradigm::bsw_flexible, 500us, 100, 5), contract_error);
    CHECK_THROWS_AS(algorithmic_duration(paradigm::bsw_flexible, 500us, 100, 5, 0), contract_error);
    CHECK_THROWS_AS(algorithmic_duration(paradigm::bsw_flexible, 500us, 100, 5, 101), contract_error);
}

TEST_CASE("algorithmic phase grows with the codebook and with the selected index")
{
    for (std::size_t c = 1; c < 200; ++c) {
        CHECK(algorithmic_duration(paradigm::oce, 500us, c + 1, 5) >
              algorithmic_duration(paradigm::oce, 500us, c, 5));
        CHECK(algorithmic_duration(paradigm::bsw_fixed, 500us, c + 1, 5) >
              algorithmic_duration(paradigm::bsw_fixed, 500us, c, 5));
        CHECK(algorithmic_duration(paradigm::bsw_flexible, 500us, 200, 5, c + 1) >
              algorithmic_duration(paradigm::bsw_flexible, 500us, 200, 5, c));
    }
}

TEST_CASE("pilot length")
{
    CHECK(pilot_length(500us, 50us, 450us, std::nullopt) == 1);
    CHECK(pilot_length(500us, 50us, 150us, std::nullopt) == 3);
    CHECK(pilot_length(500us, 50us, 100us, std::nullopt) == 4);
    CHECK(pilot_length(500us, 50us, 7us, 1u) == 1);
    CHECK_THROWS_AS(pilot_length(500us, 50us, std::nullopt, std::nullopt), config_error);
    CHECK_THROWS_AS(pilot_length(500us, 50us, 451us, std::nullopt), config_error);
    CHECK_THROWS_AS(pilot_length(500us, 50us, std::nullopt, 0u), config_error);
}

TEST_CASE("payload time")
{
    CHECK(payload_time(60ms, 500us, 52500us, 550us) == 6450us);
    CHECK(payload_time(50ms, 500us, 52500us, 550us) == 0ns);
    CHECK(payload_time(60ms, 0ns, 0ns, 0ns) == 60ms);
}

TEST_CASE("reference OCE/OBCC overhead is 53.55 ms")
{
    const auto t = compute_timing(paradigm::oce, cc_kind::obcc, reference_frame(), 100);
    CHECK(t.overhead() == 53550us);
    CHECK(t.payload == 6450us);
    CHECK(compute_timing(paradigm::oce, cc_kind::obcc, reference_frame(50ms), 100).payload == 0ns);
}

TEST_CASE("phases partition the frame, and OBCC never costs more than IBCC")
{
    random_stream rng(1);
    for (int k = 0; k < 200; ++k) {
        const nanos tti = from_seconds(rng.uniform(1e-4, 2e-3));
        const nanos guard = from_seconds(to_seconds(tti) * rng.uniform(0.01, 0.9));
        const nanos tau = from_seconds(rng.uniform(0.001, 0.3));
        if (tau < tti)
            continue;
        const frame_params f{tau, tti, guard, unsigned(rng.uniform(1, 10)), std::nullopt, 1u};
        const std::size_t card = std::size_t(rng.uniform(1, 150));
        const std::size_t c_star = 1 + std::size_t(rng.uniform(0, double(card)));
        for (auto p : {paradigm::oce, paradigm::bsw_fixed, paradigm::bsw_flexible}) {
            nanos per_kind[2];
            int i = 0;
            for (auto kind : {cc_kind::obcc, cc_kind::ibcc}) {
                const auto t = compute_timing(p, kind, f, card, c_star);
                if (t.payload > 0ns)
                    CHECK(t.setup + t.algorithmic + t.ack + t.payload == tau);
                else
                    CHECK(t.overhead() >= tau);
                per_kind[i++] = t.overhead();
            }
            CHECK(per_kind[0] <= per_kind[1]);
        }
    }
}

TEST_CASE("frame validation")
{
    CHECK_NOTHROW(reference_frame().validate());
    auto f = reference_frame();
    f.guard = 600us;
    CHECK_THROWS_WITH_AS(f.validate(), doctest::Contains("tau_s must be < T"), config_error);
    f = reference_frame();
    f.tau = 100us;
    CHECK_THROWS_AS(f.validate(), config_error);
    f = reference_frame();
    f.tti = 0ns;
    CHECK_THROWS_AS(f.validate(), config_error);
}

TEST_CASE("second and nanosecond conversions")
{
    CHECK(from_seconds(0.06) == 60ms);
    CHECK(from_seconds(450e-6) == 450us);
    CHECK(to_ms(53550us) == doctest::Approx(53.55));
}
