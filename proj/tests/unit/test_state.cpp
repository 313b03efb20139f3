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

#include <cmath>
#include <complex>
#include <vector>

#include "compread/rng.hpp"
#include "compread/state.hpp"

using Catch::Matchers::WithinAbs;
using namespace compread;

namespace {

double total(const std::vector<double> &v) {
    double s = 0.0;
    for (double x : v) {
        s += x;
    }
    return s;
}

} // namespace

TEST_CASE("basis specs produce point masses", "[state]") {
    SECTION("zero state") {
        const State s = make_state(spec::Basis{0}, 2);
        const auto &sparse = std::get<SparsePopulations>(s);
        CHECK(sparse.support_size() == 1);
        CHECK(sparse.weight(0) == 1.0);
        CHECK(sparse.to_dense() == std::vector<double>{1, 0, 0, 0});
    }
    SECTION("all ones is the last index") {
        const State s = make_state(spec::AllOnes{}, 3);
        CHECK(std::get<SparsePopulations>(s).weight(7) == 1.0);
        CHECK(describe(spec::AllOnes{}) == "all_ones");
    }
    SECTION("all zeros is index zero") {
        const State s = make_state(spec::AllZeros{}, 5);
        CHECK(std::get<SparsePopulations>(s).weight(0) == 1.0);
    }
    SECTION("sparse path has no size cap") {
        const State s = make_state(spec::AllOnes{}, 1000);
        const auto &sparse = std::get<SparsePopulations>(s);
        CHECK(sparse.entries().begin()->first == basis_dimension(1000) - 1);
        CHECK(num_qubits(s) == 1000);
        CHECK_THROWS_AS(sparse.to_dense(), std::length_error);
    }
    SECTION("index out of range") {
        CHECK_THROWS_AS(make_state(spec::Basis{4}, 2), std::out_of_range);
    }
    SECTION("zero qubits") {
        CHECK_THROWS_AS(make_state(spec::AllOnes{}, 0), std::invalid_argument);
    }
}

TEST_CASE("populations drop phases", "[state]") {
    const AmplitudeState basis(2, {1.0, 0.0, 0.0, 0.0});
    CHECK(populations(basis) == std::vector<double>{1, 0, 0, 0});

    const double r = 1.0 / std::sqrt(2.0);
    const AmplitudeState phased(1, {Amplitude{r, 0.0}, Amplitude{0.0, r}});
    const auto p = populations(phased);
    CHECK_THAT(p[0], WithinAbs(0.5, 1e-15));
    CHECK_THAT(p[1], WithinAbs(0.5, 1e-15));
}

TEST_CASE("Haar states", "[state]") {
    SECTION("normalized and deterministic per seed") {
        const State a = make_state(spec::Haar{42}, 4);
        const State b = make_state(spec::Haar{42}, 4);
        const auto &amps_a = std::get<AmplitudeState>(a).amplitudes();
        const auto &amps_b = std::get<AmplitudeState>(b).amplitudes();
        double norm = 0.0;
        for (std::size_t i = 0; i < amps_a.size(); ++i) {
            CHECK(amps_a[i] == amps_b[i]);
            norm += std::norm(amps_a[i]);
        }
        CHECK_THAT(norm, WithinAbs(1.0, 1e-12));
        const State c = make_state(spec::Haar{43}, 4);
        CHECK(std::get<AmplitudeState>(c).amplitudes()[0] != amps_a[0]);
    }

    SECTION("mean population is uniform") {
        std::vector<double> mean(16, 0.0);
        const int draws = 10000;
        for (int d = 0; d < draws; ++d) {
            CounterRng rng(derive_key({42, static_cast<std::uint64_t>(d)}));
            const auto p = populations(haar_state(4, rng));
            for (std::size_t i = 0; i < 16; ++i) {
                mean[i] += p[i] / draws;
            }
        }
        for (double m : mean) {
            CHECK_THAT(m, WithinAbs(1.0 / 16.0, 0.002));
        }
    }

    SECTION("populations match an elementwise magnitude loop") {
        const State s = make_state(spec::Haar{7}, 3);
        const auto &amps = std::get<AmplitudeState>(s).amplitudes();
        const auto p = dense_populations(s);
        for (std::size_t i = 0; i < amps.size(); ++i) {
            const double re = amps[i].real();
            const double im = amps[i].imag();
            CHECK_THAT(p[i], WithinAbs(re * re + im * im, 1e-16));
        }
        CHECK_THAT(total(p), WithinAbs(1.0, 1e-10));
    }

    SECTION("dense cap") {
        CHECK_THROWS_AS(make_state(spec::Haar{1}, 13, 12), std::length_error);
        CHECK_THROWS_AS(make_state(spec::Uniform{}, 25), std::length_error);
    }
}

TEST_CASE("explicit inputs are normalized or rejected", "[state]") {
    SECTION("amplitudes") {
        const State s =
            make_state(spec::ExplicitAmplitudes{{Amplitude{3, 0}, Amplitude{0, 4}}}, 1);
        const auto p = dense_populations(s);
        CHECK_THAT(p[0], WithinAbs(9.0 / 25.0, 1e-15));
        CHECK_THAT(p[1], WithinAbs(16.0 / 25.0, 1e-15));
        CHECK_THROWS_AS(make_state(spec::ExplicitAmplitudes{{0.0, 0.0}}, 1),
                        std::invalid_argument);
        CHECK_THROWS_AS(make_state(spec::ExplicitAmplitudes{{1.0, 0.0, 0.0}}, 1),
                        std::invalid_argument);
    }
    SECTION("populations") {
        spec::ExplicitPopulations w;
        w.weights = {{1, 2.0}, {6, 6.0}};
        const State s = make_state(w, 3);
        const auto &sparse = std::get<SparsePopulations>(s);
        CHECK_THAT(sparse.weight(1), WithinAbs(0.25, 1e-15));
        CHECK_THAT(sparse.weight(6), WithinAbs(0.75, 1e-15));
        CHECK(sparse.weight(5) == 0.0);
        spec::ExplicitPopulations negative;
        negative.weights = {{0, -1.0}, {1, 2.0}};
        CHECK_THROWS_AS(make_state(negative, 1), std::invalid_argument);
        spec::ExplicitPopulations empty;
        CHECK_THROWS_AS(make_state(empty, 1), std::invalid_argument);
    }
    SECTION("direct construction validates") {
        CHECK_THROWS_AS(AmplitudeState(1, {1.0, 1.0}), std::invalid_argument);
        CHECK_THROWS_AS(SparsePopulations(2, {{0, 0.5}}), std::invalid_argument);
        CHECK_THROWS_AS(SparsePopulations(2, {{4, 1.0}}), std::out_of_range);
    }
}

TEST_CASE("uniform state", "[state]") {
    const auto p = dense_populations(make_state(spec::Uniform{}, 3));
    for (double x : p) {
        CHECK_THAT(x, WithinAbs(0.125, 1e-15));
    }
}
