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

#include "compread/grid.hpp"

#include <algorithm>
#include <bit>
#include <complex>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "compread/fourier.hpp"

namespace compread {

namespace {

__extension__ using Wide = unsigned __int128;

// m * support below this runs the residue-table loop instead of a transform.
constexpr std::uint64_t kDirectProfileWork = std::uint64_t{1} << 14U;

// e^{i 2^{j+1} x} for j = 0..n-1. ldexp is exact and sin/cos reduce their
// argument against the true pi, so every factor is accurate to an ulp.
std::vector<std::complex<double>> doubled_phasors(unsigned n, double x) {
    std::vector<std::complex<double>> phasors(n);
    for (unsigned j = 0; j < n; ++j) {
        const double theta = std::ldexp(x, static_cast<int>(j) + 1);
        if (!std::isfinite(theta)) {
            throw std::out_of_range("angle overflows at bit " + std::to_string(j));
        }
        phasors[j] = {std::cos(theta), std::sin(theta)};
    }
    return phasors;
}

void check_length(std::span<const double> populations, const Grid &grid) {
    if (populations.size() != grid.points() + 1) {
        throw std::invalid_argument("population vector length must be 2^n");
    }
}

} // namespace

Grid::Grid(unsigned num_qubits) : num_qubits_{num_qubits}, points_{0} {
    if (num_qubits == 0) {
        throw std::invalid_argument("grid requires n >= 1");
    }
    if (num_qubits > kMaxGridQubits) {
        throw std::length_error("grid for n=" + std::to_string(num_qubits) +
                                " cannot be indexed");
    }
    points_ = (std::uint64_t{1} << num_qubits) - 1;
}

double Grid::angle(std::uint64_t k) const {
    if (k == 0 || k > points_) {
        throw std::out_of_range("grid index outside [1, m]");
    }
    return static_cast<double>(k) * std::numbers::pi /
           static_cast<double>(modulus());
}

std::vector<double> Grid::angles() const {
    std::vector<double> out;
    out.reserve(points_);
    for (std::uint64_t k = 1; k <= points_; ++k) {
        out.push_back(angle(k));
    }
    return out;
}

Grid build_grid(unsigned num_qubits) { return Grid(num_qubits); }

double ideal_ancilla_probability(std::span<const double> populations, double x) {
    const unsigned n = std::max(1U, static_cast<unsigned>(std::bit_width(populations.size())));
    const auto phasors = doubled_phasors(n, x);
    double total = 0.0;
    for (std::size_t i = 0; i < populations.size(); ++i) {
        if (populations[i] != 0.0) {
            std::complex<double> phase{1.0, 0.0};
            for (std::size_t rest = i; rest != 0; rest &= rest - 1) {
                phase *= phasors[static_cast<unsigned>(std::countr_zero(rest))];
            }
            total += populations[i] * 0.5 * (1.0 + phase.real());
        }
    }
    return std::clamp(total, 0.0, 1.0);
}

double ideal_ancilla_probability(const SparsePopulations &populations, double x) {
    // cos^2(i x) = (1 + Re e^{2 i x i}) / 2 and e^{2 i x i} is the product of
    // e^{i 2^{j+1} x} over the set bits j of i. Each factor is evaluated
    // from the exact double 2^{j+1} x, so the phase stays accurate for
    // indices far beyond what a floating-point product i * x can resolve.
    const auto phasors = doubled_phasors(populations.num_qubits(), x);
    double total = 0.0;
    for (const auto &[index, w] : populations.entries()) {
        std::complex<double> phase{1.0, 0.0};
        unsigned bit = 0;
        for (BasisIndex rest = index; rest != 0; rest >>= 64, bit += 64) {
            auto limb = static_cast<std::uint64_t>(rest & 0xFFFFFFFFFFFFFFFFULL);
            while (limb != 0) {
                phase *= phasors[bit + static_cast<unsigned>(std::countr_zero(limb))];
                limb &= limb - 1;
            }
        }
        total += w * 0.5 * (1.0 + phase.real());
    }
    return std::clamp(total, 0.0, 1.0);
}

double ancilla_at_grid_point(std::span<const double> populations,
                             const Grid &grid, std::uint64_t k) {
    check_length(populations, grid);
    if (k == 0 || k > grid.points()) {
        throw std::out_of_range("grid index outside [1, m]");
    }
    const std::uint64_t modulus = grid.modulus();
    const double step = 2.0 * std::numbers::pi / static_cast<double>(modulus);
    double total = 0.0;
    for (std::uint64_t i = 0; i < populations.size(); ++i) {
        if (populations[i] != 0.0) {
            // cos^2(i x_k) = (1 + cos(2 pi (i k mod L) / L)) / 2.
            const auto residue = static_cast<std::uint64_t>(
                (static_cast<Wide>(i) * k) % modulus);
            total += populations[i] * 0.5 *
                     (1.0 + std::cos(step * static_cast<double>(residue)));
        }
    }
    return std::clamp(total, 0.0, 1.0);
}

std::vector<double> ancilla_profile(std::span<const double> populations,
                                    const Grid &grid) {
    check_length(populations, grid);
    const std::uint64_t m = grid.points();
    const std::uint64_t modulus = grid.modulus();
    std::vector<double> profile(m);

    if (m * populations.size() <= kDirectProfileWork) {
        std::vector<double> table(modulus);
        for (std::uint64_t t = 0; t < modulus; ++t) {
            table[t] = std::cos(2.0 * std::numbers::pi * static_cast<double>(t) /
                                static_cast<double>(modulus));
        }
        for (std::uint64_t k = 1; k <= m; ++k) {
            double acc = 0.0;
            for (std::uint64_t i = 0; i < populations.size(); ++i) {
                acc += populations[i] * table[(i * k) % modulus];
            }
            profile[k - 1] = std::clamp(0.5 * (1.0 + acc), 0.0, 1.0);
        }
        return profile;
    }

    const std::vector<double> sums =
        fourier::cosine_sums(populations, static_cast<std::size_t>(modulus));
    for (std::uint64_t k = 1; k <= m; ++k) {
        profile[k - 1] = std::clamp(0.5 * (1.0 + sums[k]), 0.0, 1.0);
    }
    return profile;
}

} // namespace compread
