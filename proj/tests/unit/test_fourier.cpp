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

#include <complex>
#include <vector>

#include "compread/fourier.hpp"
#include "oracles.hpp"

using compread::fourier::cosine_sums;
using compread::fourier::dft;
using compread::fourier::fft_pow2;

namespace {

std::vector<std::complex<oracle::Real>> slow_dft(const std::vector<std::complex<double>> &x) {
    const std::size_t len = x.size();
    std::vector<std::complex<oracle::Real>> out(len);
    for (std::size_t f = 0; f < len; ++f) {
        std::complex<oracle::Real> acc = 0;
        for (std::size_t t = 0; t < len; ++t) {
            const oracle::Real angle = -2 * oracle::kPi *
                                       static_cast<oracle::Real>((f * t) % len) /
                                       static_cast<oracle::Real>(len);
            acc += std::complex<oracle::Real>(x[t]) *
                   std::complex<oracle::Real>(std::cos(angle), std::sin(angle));
        }
        out[f] = acc;
    }
    return out;
}

std::vector<std::complex<double>> random_signal(std::size_t len, std::uint64_t seed) {
    const auto re = oracle::random_unit_box(len, seed);
    const auto im = oracle::random_unit_box(len, seed + 1000);
    std::vector<std::complex<double>> x(len);
    for (std::size_t i = 0; i < len; ++i) {
        x[i] = {re[i] - 0.5, im[i] - 0.5};
    }
    return x;
}

} // namespace

TEST_CASE("dft matches the defining sum for many lengths", "[fourier]") {
    const std::size_t len = GENERATE(1, 2, 3, 5, 7, 8, 15, 16, 31, 33, 63, 64, 100, 127, 255,
                                     511, 1000);
    const auto x = random_signal(len, len);
    const auto fast = dft(x);
    const auto slow = slow_dft(x);
    REQUIRE(fast.size() == len);
    double worst = 0.0;
    for (std::size_t f = 0; f < len; ++f) {
        worst = std::max(worst, static_cast<double>(std::abs(
                                    std::complex<oracle::Real>(fast[f]) - slow[f])));
    }
    INFO("length " << len);
    CHECK(worst < 1e-10 * static_cast<double>(len));
}

TEST_CASE("radix-2 transform inverts up to scaling", "[fourier]") {
    auto x = random_signal(256, 3);
    auto y = x;
    fft_pow2(y);
    fft_pow2(y, true);
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(std::abs(y[i] / 256.0 - x[i]) < 1e-13);
    }
    std::vector<std::complex<double>> bad(12);
    CHECK_THROWS_AS(fft_pow2(bad), std::invalid_argument);
}

TEST_CASE("cosine sums of a zero-padded sequence", "[fourier]") {
    const std::size_t len = GENERATE(7, 15, 31, 2047);
    const auto y = oracle::random_unit_box((len + 1) / 2, len);
    const auto sums = cosine_sums(y, len);
    REQUIRE(sums.size() == len);
    for (std::size_t f = 0; f < len; f += (len > 100 ? 97 : 1)) {
        oracle::Real acc = 0;
        for (std::size_t t = 0; t < y.size(); ++t) {
            acc += y[t] * std::cos(2 * oracle::kPi * static_cast<oracle::Real>((f * t) % len) /
                                   static_cast<oracle::Real>(len));
        }
        CHECK(std::abs(sums[f] - static_cast<double>(acc)) < 1e-10);
    }
    CHECK_THROWS_AS(cosine_sums(y, y.size() - 1), std::invalid_argument);
}
