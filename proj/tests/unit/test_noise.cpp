// Copyright 2026 The compread Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "compread/noise.hpp"
#include "oracles.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::ContainsSubstring;
using namespace compread;

TEST_CASE("depolarizing fidelity", "[noise]") {
    CHECK(depolarizing_fidelity(0.0, 100) == 1.0);
    CHECK(depolarizing_fidelity(0.3, 0) == 1.0);
    double product = 1.0;
    for (int g = 0; g < 6; ++g) {
        product *= 0.9937;
    }
    CHECK_THAT(depolarizing_fidelity(0.0063, 6), WithinAbs(product, 1e-15));
    CHECK_THROWS_AS(depolarizing_fidelity(1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(depolarizing_fidelity(-0.1, 3), std::invalid_argument);
}

TEST_CASE("noisy ancilla probability", "[noise]") {
    const GateNoiseModel clean{};
    CHECK(noisy_ancilla_probability(1.0, clean, ReadoutErrorModel{}, 5) == 1.0);
    CHECK_THAT(noisy_ancilla_probability(1.0, clean,
                                         ReadoutErrorModel::asymmetric(0.0346, 0.0608), 5),
               WithinAbs(0.9654, 1e-15));
    for (double gamma : {0.0, 0.01, 0.2, 0.9}) {
        for (double xi : {0.0, 0.0452, 0.3}) {
            CHECK(noisy_ancilla_probability(0.5, GateNoiseModel{gamma, std::nullopt},
                                            ReadoutErrorModel::symmetric(xi), 7) == 0.5);
        }
    }
    SECTION("gate count override wins") {
        const GateNoiseModel gate{0.01, 3};
        const double f = depolarizing_fidelity(0.01, 3);
        CHECK_THAT(noisy_ancilla_probability(0.8, gate, ReadoutErrorModel{}, 100),
                   WithinAbs(f * 0.8 + (1 - f) / 2, 1e-15));
    }
    SECTION("affine in the ideal value") {
        const auto readout = ReadoutErrorModel::asymmetric(0.02, 0.07);
        const double f = depolarizing_fidelity(0.004, 9);
        const double a = (1 - 0.02 - 0.07) * f;
        const double b = 0.07 + (1 - 0.02 - 0.07) * (1 - f) / 2;
        for (double ideal : {0.0, 0.1, 0.37, 0.5, 0.99, 1.0}) {
            CHECK_THAT(noisy_ancilla_probability(ideal, f, readout),
                       WithinAbs(a * ideal + b, 1e-15));
        }
    }
    CHECK_THROWS_AS(noisy_ancilla_probability(1.5, clean, ReadoutErrorModel{}, 1),
                    std::invalid_argument);
}

TEST_CASE("readout rates are validated", "[noise]") {
    CHECK_THROWS_AS(ReadoutErrorModel::symmetric(0.5), std::invalid_argument);
    CHECK_THROWS_AS(ReadoutErrorModel::symmetric(-1e-3), std::invalid_argument);
    CHECK_THROWS_AS(ReadoutErrorModel::asymmetric(0.1, 0.6), std::invalid_argument);
    CHECK_THROWS_AS(ReadoutErrorModel::symmetric(0.2).scaled(3.0), std::invalid_argument);
    const auto scaled = ReadoutErrorModel::asymmetric(0.01, 0.02).scaled(2.0);
    CHECK(scaled.e0() == 0.02);
    CHECK(scaled.e1() == 0.04);
    CHECK_FALSE(scaled.is_symmetric());
    CHECK(ReadoutErrorModel{}.is_noiseless());
}

TEST_CASE("readout transition", "[noise]") {
    SECTION("zero rate is the identity") {
        const auto w = oracle::random_simplex(4, 3);
        CHECK(apply_readout_transition(w, ReadoutErrorModel::symmetric(0.0), 4) == w);
    }
    SECTION("two qubits from the zero state") {
        const std::vector<double> e0{1, 0, 0, 0};
        const auto out = apply_readout_transition(e0, ReadoutErrorModel::symmetric(0.1), 2);
        const std::vector<double> expected{0.81, 0.09, 0.09, 0.01};
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK_THAT(out[i], WithinAbs(expected[i], 1e-15));
        }
    }
    SECTION("matches the explicit Kronecker matrix") {
        for (unsigned n = 1; n <= 6; ++n) {
            const auto w = oracle::random_simplex(n, 100 + n);
            const auto out =
                apply_readout_transition(w, ReadoutErrorModel::asymmetric(0.02, 0.05), n);
            const auto ref = oracle::apply(oracle::readout_matrix(n, 0.02L, 0.05L), w);
            for (std::size_t i = 0; i < w.size(); ++i) {
                CHECK_THAT(out[i], WithinAbs(static_cast<double>(ref[i]), 1e-12));
            }
        }
    }
    SECTION("symmetric and asymmetric agree at equal rates") {
        const auto w = oracle::random_simplex(5, 9);
        const auto a = apply_readout_transition(w, ReadoutErrorModel::symmetric(0.03), 5);
        const auto b =
            apply_readout_transition(w, ReadoutErrorModel::asymmetric(0.03, 0.03), 5);
        CHECK(a == b);
    }
    CHECK_THROWS_AS(apply_readout_transition(std::vector<double>(3, 1.0 / 3),
                                             ReadoutErrorModel{}, 2),
                    std::invalid_argument);
}

TEST_CASE("gate error conversion", "[noise]") {
    CHECK_THAT(gate_error_to_depolarizing(0.0059, 4), WithinAbs(0.006293, 5e-7));
    CHECK(gate_error_to_depolarizing(0.0, 4) == 0.0);
    CHECK(gate_error_to_depolarizing(0.0, 16) == 0.0);
    CHECK_THAT(gate_error_to_depolarizing(0.002453 * (1.0 - 1.0 / 16.0), 4),
               WithinAbs(0.002453, 1e-15));
    CHECK_THROWS_AS(gate_error_to_depolarizing(0.01, 1), std::invalid_argument);
}

TEST_CASE("device profiles", "[noise]") {
    const auto &zcz = device_profile("zuchongzhi-2.0");
    CHECK(zcz.xi == 0.0452);
    CHECK(zcz.gamma == 0.006293);
    CHECK(zcz.asymmetric_readout().e0() == 0.0346);
    CHECK(zcz.asymmetric_readout().e1() == 0.0608);
    const auto &syc = device_profile("sycamore-2021");
    CHECK(syc.asymmetric_readout().e0() == 0.009);
    CHECK(syc.asymmetric_readout().e1() == 0.0255);
    CHECK(device_profile("zuchongzhi-2.1").xi == 0.0226);
    CHECK(device_profile("sycamore-2019").e1 == 0.051);
    const auto &h1 = device_profile("h1-2");
    CHECK(h1.symmetric_readout().e0() == 0.0039);
    CHECK_THROWS_WITH(h1.asymmetric_readout(), ContainsSubstring("unavailable"));
    CHECK_THROWS_AS(device_profile("no-such-device"), std::invalid_argument);
    CHECK(device_profiles().size() == 5);
}
