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
/**
 * @file
 * Reproducible random streams.
 *
 * Every random draw in the library comes from a CounterRng. A stream is
 * identified by a 64-bit key; output j of the stream is
 *
 *     mix64(key + (j + 1) * 0x9E3779B97F4A7C15)
 *
 * where mix64 is the SplitMix64 finalizer. Keys are derived from a path of
 * integers (master seed, repetition, domain, index) by folding each element
 * through mix64, so any two distinct paths give unrelated streams and the
 * value of a draw never depends on which thread produced it.
 */
#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace compread {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31U);
}

/// Stream domains. Keeps direct-readout, compression and state-sampling
/// draws in separate substreams even when they share seed and repetition.
enum class StreamDomain : std::uint64_t {
    State = 1,
    Direct = 2,
    Compression = 3,
    Test = 99,
};

/// Fold a key path into a single stream key.
std::uint64_t derive_key(std::initializer_list<std::uint64_t> path) noexcept;

/// Key for (master seed, repetition, domain, index).
std::uint64_t substream_key(std::uint64_t master, std::uint64_t repetition,
                            StreamDomain domain, std::uint64_t index) noexcept;

/// Counter-based 64-bit generator; satisfies UniformRandomBitGenerator.
class CounterRng {
  public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t key) noexcept : key_{key} {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept {
        ++counter_;
        return mix64(key_ + counter_ * 0x9E3779B97F4A7C15ULL);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept {
        return static_cast<double>((*this)() >> 11U) * 0x1.0p-53;
    }

    /// Pair of independent standard normals (Box-Muller).
    std::pair<double, double> normal_pair() noexcept;

    [[nodiscard]] std::uint64_t key() const noexcept { return key_; }
    [[nodiscard]] std::uint64_t counter() const noexcept { return counter_; }

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Binomial(trials, p) draw.
std::uint64_t sample_binomial(CounterRng &rng, std::uint64_t trials, double p);

/// Multinomial(total, probs) draw by sequential conditional binomials.
/// probs must be nonnegative; it is normalized internally.
std::vector<std::uint64_t> sample_multinomial(CounterRng &rng,
                                              std::uint64_t total,
                                              std::span<const double> probs);

} // namespace compread
