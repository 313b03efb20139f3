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
#include <stdexcept>
#include <vector>

#include "compread/decoder.hpp"
#include "compread/engines.hpp"
#include "compread/grid.hpp"
#include "compread/rng.hpp"
#include "compread/state.hpp"
#include "oracles.hpp"

using Catch::Matchers::WithinAbs;
using namespace compread;

namespace {

double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

AncillaEstimates constant_estimates(unsigned n, double value) {
    const Grid grid(n);
    return {grid, std::vector<double>(grid.points(), value)};
}

} // namespace

TEST_CASE("g_m closed form", "[decoder]") {
    CHECK(g_m(0, 5) == 5.0);
    CHECK(g_m(7, 3) == 3.0);
    CHECK(g_m(1, 3) == -0.5);
    oracle::Real sum = 0;
    for (int k = 1; k <= 3; ++k) {
        sum += std::cos(2 * k * oracle::kPi / 7);
    }
    CHECK_THAT(g_m(1, 3), WithinAbs(static_cast<double>(sum), 1e-12));
    CHECK_THROWS_AS(g_m(1, 0), std::invalid_argument);
}

TEST_CASE("naive decode on constant inputs", "[decoder]") {
    for (unsigned n = 1; n <= 6; ++n) {
        const double len = static_cast<double>((std::uint64_t{2} << n) - 1);
        const auto ones = decode_naive(constant_estimates(n, 1.0));
        CHECK_THAT(ones.values[0], WithinAbs(1.0, 1e-12));
        for (std::size_t i = 1; i < ones.values.size(); ++i) {
            CHECK_THAT(ones.values[i], WithinAbs(0.0, 1e-12));
        }
        const auto half = decode_naive(constant_estimates(n, 0.5));
        CHECK_THAT(half.values[0], WithinAbs(1.0 / len, 1e-12));
        for (std::size_t i = 1; i < half.values.size(); ++i) {
            CHECK_THAT(half.values[i], WithinAbs(2.0 / len, 1e-12));
        }
    }
}

TEST_CASE("decode inverts the ideal profile", "[decoder]") {
    CounterRng rng(11);
    const auto w = populations(haar_state(4, rng));
    const Grid grid(4);
    const AncillaEstimates est(grid, ancilla_profile(w, grid));
    CHECK(max_abs_diff(decode_naive(est).values, w) <= 1e-10);
    CHECK(max_abs_diff(decode_fast(est).values, w) <= 1e-10);
}

TEST_CASE("decoders agree with the long-double oracle", "[decoder]") {
    for (unsigned n = 1; n <= 8; ++n) {
        const Grid grid(n);
        const auto a = oracle::random_unit_box(grid.points(), 40 + n);
        const auto ref = oracle::decode(a);
        const AncillaEstimates est(grid, a);
        const auto naive = decode_naive(est);
        const auto fast = decode_fast(est);
        for (std::size_t i = 0; i < ref.size(); ++i) {
            CHECK_THAT(naive.values[i], WithinAbs(static_cast<double>(ref[i]), 1e-12));
            CHECK_THAT(fast.values[i], WithinAbs(static_cast<double>(ref[i]), 1e-12));
        }
    }
}

TEST_CASE("fast decode matches naive", "[decoder]") {
    const auto fast_ones = decode_fast(constant_estimates(7, 1.0));
    CHECK_THAT(fast_ones.values[0], WithinAbs(1.0, 1e-10));
    for (std::size_t i = 1; i < fast_ones.values.size(); ++i) {
        CHECK_THAT(fast_ones.values[i], WithinAbs(0.0, 1e-10));
    }
    for (unsigned n = 1; n <= 8; ++n) {
        const Grid grid(n);
        const AncillaEstimates est(grid, oracle::random_unit_box(grid.points(), n));
        CHECK(max_abs_diff(decode_fast(est).values, decode_naive(est).values) <= 1e-9);
    }
    const Grid big(10);
    const AncillaEstimates est(big, oracle::random_unit_box(big.points(), 10));
    CHECK(max_abs_diff(decode_fast(est).values, decode_naive(est).values) <= 1e-8);
}

TEST_CASE("estimates are validated", "[decoder]") {
    const Grid grid(2);
    CHECK_THROWS_AS(AncillaEstimates(grid, {0.1, 0.2}), std::invalid_argument);
    CHECK_THROWS_AS(AncillaEstimates(grid, {0.1, 0.2, 1.1}), std::invalid_argument);
    CHECK_THROWS_AS(AncillaEstimates(grid, {0.1, -0.2, 0.3}), std::invalid_argument);
}

TEST_CASE("total variation error", "[decoder]") {
    const std::vector<double> truth{1.0, 0.0};
    CHECK(tv_error(truth, truth) == 0.0);
    CHECK_THAT(tv_error(std::vector<double>{0.9, 0.1}, truth), WithinAbs(0.1, 1e-15));
    CHECK_THROWS_AS(tv_error(std::vector<double>{1.0}, truth), std::invalid_argument);

    SECTION("noisy basis state against a dense loop") {
        std::vector<double> w(8, 0.0);
        w[7] = 1.0;
        const CompressionSetup setup{ReadoutErrorModel::symmetric(0.0452), {}, {}};
        const auto result = compression_readout_exact(w, setup);
        const auto ref = oracle::compression_pipeline(w, 0.0452L, 0.0452L, 0.0L, 0);
        long double total = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            total += std::fabs(ref[i] - static_cast<long double>(w[i]));
        }
        CHECK_THAT(result.tv_error, WithinAbs(static_cast<double>(total / 2), 1e-12));
    }
    SECTION("sparse truth overload") {
        const Grid grid(3);
        const auto decoded = decode(AncillaEstimates(grid, oracle::random_unit_box(7, 5)));
        const auto sparse = SparsePopulations::basis(3, 6);
        CHECK_THAT(tv_error(decoded, sparse),
                   WithinAbs(tv_error(decoded, sparse.to_dense()), 1e-15));
    }
}

TEST_CASE("clip and renormalize", "[decoder]") {
    const auto out = clip_and_renormalize(std::vector<double>{0.6, -0.2, 0.6});
    CHECK(out == std::vector<double>{0.5, 0.0, 0.5});
    CHECK_THROWS_AS(clip_and_renormalize(std::vector<double>{-1.0, 0.0}),
                    std::invalid_argument);
}
