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

#include "compread/bounds.hpp"
#include "compread/engines.hpp"
#include "oracles.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace compread;

TEST_CASE("shot budget", "[bounds]") {
    CHECK(theorem1_shots({0.1, 0.05, 3}) == 3680);
    const long double exact = (48.0L * 9 + 4.0L * 3 * 7 * 0.1L) / (49 * 0.01L) * std::log(60.0L);
    CHECK(theorem1_shots({0.1, 0.05, 3}) == static_cast<std::uint64_t>(std::ceil(exact)));

    SECTION("inverse-square scaling in epsilon") {
        double previous_ratio = 0.0;
        for (double eps : {0.1, 0.01, 0.001, 0.0001}) {
            const double ratio = static_cast<double>(theorem1_shots({eps, 0.05, 7})) /
                                 static_cast<double>(theorem1_shots({2 * eps, 0.05, 7}));
            CHECK(ratio < 4.0);
            CHECK(ratio > previous_ratio);
            previous_ratio = ratio;
        }
        CHECK_THAT(previous_ratio, WithinAbs(4.0, 1e-3));
    }
    SECTION("large-m asymptote") {
        // The budget tends to (12/eps^2 + 2/eps) ln(m/eta); the 2/eps part is
        // negligible once eps is small.
        const std::uint64_t m = std::uint64_t{1} << 20;
        const double eps = 0.001;
        const double asymptote = 12.0 / (eps * eps) * std::log(static_cast<double>(m) / 0.05);
        CHECK_THAT(static_cast<double>(theorem1_shots({eps, 0.05, m})) / asymptote,
                   WithinAbs(1.0, 1e-3));
    }
    SECTION("monotone on a lattice") {
        const std::vector<double> eps{0.01, 0.02, 0.05, 0.1, 0.2, 0.5};
        const std::vector<double> eta{0.001, 0.01, 0.05, 0.1, 0.5};
        for (std::uint64_t m : {1ULL, 3ULL, 7ULL, 63ULL, 1023ULL}) {
            for (std::size_t a = 0; a < eps.size(); ++a) {
                for (std::size_t b = 0; b < eta.size(); ++b) {
                    const auto here = theorem1_shots({eps[a], eta[b], m});
                    if (a + 1 < eps.size()) {
                        CHECK(theorem1_shots({eps[a + 1], eta[b], m}) <= here);
                    }
                    if (b + 1 < eta.size()) {
                        CHECK(theorem1_shots({eps[a], eta[b + 1], m}) <= here);
                    }
                }
            }
        }
    }
    CHECK_THROWS_AS(theorem1_shots({0.0, 0.05, 3}), std::invalid_argument);
    CHECK_THROWS_AS(theorem1_shots({0.1, 1.0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(theorem1_shots({0.1, 0.05, 0}), std::invalid_argument);
}

TEST_CASE("variance bound", "[bounds]") {
    CHECK_THAT(variance_bound(3, 100), WithinRel(48.0 / 4900.0, 1e-15));
    CHECK(variance_bound(3, 1000000000000000ULL) < 1e-15);
    CHECK_THROWS_AS(variance_bound(3, 0), std::invalid_argument);
}

TEST_CASE("direct closed form", "[bounds]") {
    CHECK_THAT(direct_error_closed_form(1, ReadoutErrorModel::symmetric(0.0452), 1),
               WithinAbs(0.0452, 1e-15));
    CHECK_THAT(direct_error_closed_form(2, ReadoutErrorModel::symmetric(0.0452), 3),
               WithinAbs(0.08836, 1e-5));

    SECTION("matches the Kronecker oracle for every basis state") {
        for (unsigned n = 1; n <= 6; ++n) {
            for (auto [e0, e1] : {std::pair{0.0452L, 0.0452L}, std::pair{0.0346L, 0.0608L}}) {
                const auto mat = oracle::readout_matrix(n, e0, e1);
                const auto model = ReadoutErrorModel::asymmetric(static_cast<double>(e0),
                                                                 static_cast<double>(e1));
                for (std::size_t i = 0; i < mat.size(); ++i) {
                    // The state stays put with probability Q[i][i]; TV is 1 - that.
                    CHECK_THAT(direct_error_closed_form(n, model, i),
                               WithinAbs(static_cast<double>(1 - mat[i][i]), 1e-12));
                }
            }
        }
    }
    SECTION("equals the dense engine up to n = 10") {
        const auto model = ReadoutErrorModel::symmetric(0.0452);
        for (unsigned n = 1; n <= 10; ++n) {
            std::vector<double> w(std::size_t{1} << n, 0.0);
            const std::size_t i = (std::size_t{1} << n) - 1 - (n / 2);
            w[i] = 1.0;
            CHECK_THAT(direct_error_closed_form(n, model, i),
                       WithinAbs(direct_readout_exact(w, model).tv_error, 1e-12));
        }
    }
    SECTION("binomial sum agrees") {
        for (unsigned n = 1; n <= 20; ++n) {
            for (double xi : {0.0039, 0.0452, 0.2}) {
                CHECK_THAT(direct_error_binomial_sum(n, xi),
                           WithinAbs(1.0 - std::pow(1.0 - xi, n), 1e-12));
            }
        }
    }
    SECTION("index range is checked") {
        CHECK_THROWS_AS(direct_error_closed_form(2, ReadoutErrorModel{}, 4), std::out_of_range);
        CHECK_THROWS_AS(direct_error_closed_form(0, ReadoutErrorModel{}, 0),
                        std::invalid_argument);
    }
    SECTION("large n stays accurate") {
        const BasisIndex all = basis_dimension(1000) - 1;
        CHECK_THAT(direct_error_closed_form(1000, ReadoutErrorModel::symmetric(1e-6), all),
                   WithinRel(-std::expm1(1000 * std::log1p(-1e-6)), 1e-12));
    }
}
