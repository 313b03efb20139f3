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
 * The Fourier sampling grid and the ideal ancilla |0> probability.
 *
 * For n data qubits the grid has m = 2^n - 1 angles x_k = k pi / (2m + 1),
 * k = 1..m. After the encoding rotations the ancilla reads |0> with
 * probability A(x) = sum_i w_i cos^2(i x), a cosine series in x whose
 * coefficients are the populations w_i.
 */
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "compread/state.hpp"

namespace compread {

/// Grid for n qubits. Indexable for n <= kMaxGridQubits.
class Grid {
  public:
    static constexpr unsigned kMaxGridQubits = 62;

    /// Throws std::invalid_argument for n == 0 and std::length_error above
    /// kMaxGridQubits.
    explicit Grid(unsigned num_qubits);

    [[nodiscard]] unsigned num_qubits() const noexcept { return num_qubits_; }
    /// m = 2^n - 1.
    [[nodiscard]] std::uint64_t points() const noexcept { return points_; }
    /// 2m + 1, the period of the residue arithmetic.
    [[nodiscard]] std::uint64_t modulus() const noexcept { return 2 * points_ + 1; }
    /// x_k for k in [1, m].
    [[nodiscard]] double angle(std::uint64_t k) const;
    [[nodiscard]] std::vector<double> angles() const;

  private:
    unsigned num_qubits_;
    std::uint64_t points_;
};

Grid build_grid(unsigned num_qubits);

/// A(x) = sum_i w_i cos^2(i x) over a dense population vector.
///
/// The phase of each index is assembled from e^{i 2^{j+1} x} over its set
/// bits, so large i * x is not rounded as one product.
double ideal_ancilla_probability(std::span<const double> populations, double x);

/// A(x) over a sparse support in O(support * n), accurate for any index
/// width as long as 2^n x stays finite.
double ideal_ancilla_probability(const SparsePopulations &populations, double x);

/// A(x_k) with the phase i * k reduced exactly modulo 2m + 1.
double ancilla_at_grid_point(std::span<const double> populations,
                             const Grid &grid, std::uint64_t k);

/// A(x_k) for k = 1..m (element k-1). Uses the odd-length transform for
/// large grids; values are clamped to [0, 1].
std::vector<double> ancilla_profile(std::span<const double> populations,
                                    const Grid &grid);

} // namespace compread
