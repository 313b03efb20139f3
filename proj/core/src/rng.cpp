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

#include "compread/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/random/binomial_distribution.hpp>

namespace compread {

std::uint64_t derive_key(std::initializer_list<std::uint64_t> path) noexcept {
    std::uint64_t key = 0x6A09E667F3BCC908ULL;
    for (std::uint64_t part : path) {
        key = mix64(key ^ mix64(part + 0x9E3779B97F4A7C15ULL));
    }
    return key;
}

std::uint64_t substream_key(std::uint64_t master, std::uint64_t repetition,
                            StreamDomain domain, std::uint64_t index) noexcept {
    return derive_key(
        {master, repetition, static_cast<std::uint64_t>(domain), index});
}

std::pair<double, double> CounterRng::normal_pair() noexcept {
    // 1 - u keeps the log argument in (0, 1].
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(theta), radius * std::sin(theta)};
}

std::uint64_t sample_binomial(CounterRng &rng, std::uint64_t trials, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("binomial probability outside [0, 1]");
    }
    if (trials == 0 || p == 0.0) {
        return 0;
    }
    if (p == 1.0) {
        return trials;
    }
    boost::random::binomial_distribution<std::int64_t, double> dist(
        static_cast<std::int64_t>(trials), p);
    return static_cast<std::uint64_t>(dist(rng));
}

std::vector<std::uint64_t> sample_multinomial(CounterRng &rng,
                                              std::uint64_t total,
                                              std::span<const double> probs) {
    std::vector<std::uint64_t> counts(probs.size(), 0);
    double remaining_mass = 0.0;
    for (double p : probs) {
        if (p < 0.0) {
            throw std::invalid_argument("negative multinomial probability");
        }
        remaining_mass += p;
    }
    if (remaining_mass <= 0.0) {
        throw std::invalid_argument("multinomial probabilities sum to zero");
    }
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] > 0.0) {
            last_positive = i;
        }
    }
    std::uint64_t remaining = total;
    for (std::size_t i = 0; i < probs.size() && remaining > 0; ++i) {
        if (probs[i] == 0.0) {
            continue;
        }
        if (i == last_positive) {
            counts[i] = remaining;
            break;
        }
        const double conditional =
            remaining_mass > 0.0
                ? std::clamp(probs[i] / remaining_mass, 0.0, 1.0)
                : 1.0;
        const std::uint64_t draw = sample_binomial(rng, remaining, conditional);
        counts[i] = draw;
        remaining -= draw;
        remaining_mass -= probs[i];
    }
    return counts;
}

} // namespace compread
