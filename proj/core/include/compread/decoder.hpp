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
 * Population recovery from ancilla |0> probabilities.
 *
 * With L = 2m + 1 and estimates A_k at x_k:
 *
 *     p_0 = (1 - 2m + 4 sum_k A_k) / L
 *     p_i = 4 (1 + 2 sum_k A_k cos(2 i x_k)) / L,   i = 1..m
 *
 * The output always sums to one, for any input vector, because
 * sum_k cos(2 i x_k) = -1/2 whenever L does not divide i. Outputs are raw:
 * they may be negative and are never clipped unless the caller asks.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "compread/grid.hpp"
#include "compread/state.hpp"

namespace compread {

/// Per-grid-point ancilla estimates A_k, k = 1..m (element k-1).
class AncillaEstimates {
  public:
    /// Throws std::invalid_argument unless values has m entries in [0, 1].
    AncillaEstimates(Grid grid, std::vector<double> values);

    [[nodiscard]] const Grid &grid() const noexcept { return grid_; }
    [[nodiscard]] std::span<const double> values() const noexcept {
        return values_;
    }

  private:
    Grid grid_;
    std::vector<double> values_;
};

enum class Provenance { Exact, Sampled };

struct DecodedPopulations {
    unsigned num_qubits = 0;
    std::vector<double> values;
    Provenance source = Provenance::Exact;
    std::optional<std::uint64_t> shots_per_grid;
};

/// g_m(i) = sum_{k=1..m} cos(2 i x_k): m when (2m+1) | i, else -1/2.
double g_m(std::uint64_t i, std::uint64_t m);

/// O(m^2) reference decoder over a residue-indexed cosine table.
DecodedPopulations decode_naive(const AncillaEstimates &estimates);

/// O(m log m) decoder through one odd-length transform.
DecodedPopulations decode_fast(const AncillaEstimates &estimates);

/// Naive below kFastDecodeThreshold grid points, fast from there on. The
/// threshold sits at the measured crossover (n = 10 on x86-64).
DecodedPopulations decode(const AncillaEstimates &estimates);

inline constexpr std::uint64_t kFastDecodeThreshold = 1023;

/// E = 1/2 sum_i |p_i - w_i|. Throws std::invalid_argument on a length
/// mismatch.
double tv_error(std::span<const double> decoded, std::span<const double> truth);
double tv_error(const DecodedPopulations &decoded, std::span<const double> truth);
/// Sparse truth: one pass over p with a merge against the support.
double tv_error(const DecodedPopulations &decoded, const SparsePopulations &truth);

/// Optional post-processor: clip negatives to zero and renormalize.
std::vector<double> clip_and_renormalize(std::span<const double> values);

} // namespace compread
