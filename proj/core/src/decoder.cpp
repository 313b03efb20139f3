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

#include "compread/decoder.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "compread/fourier.hpp"

namespace compread {

AncillaEstimates::AncillaEstimates(Grid grid, std::vector<double> values)
    : grid_{grid}, values_{std::move(values)} {
    if (values_.size() != grid_.points()) {
        throw std::invalid_argument("estimate count must equal the grid size m");
    }
    for (double v : values_) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw std::invalid_argument("ancilla estimate outside [0, 1]");
        }
    }
}

double g_m(std::uint64_t i, std::uint64_t m) {
    if (m == 0) {
        throw std::invalid_argument("g_m requires m >= 1");
    }
    return i % (2 * m + 1) == 0 ? static_cast<double>(m) : -0.5;
}

DecodedPopulations decode_naive(const AncillaEstimates &estimates) {
    const Grid &grid = estimates.grid();
    const std::uint64_t m = grid.points();
    const std::uint64_t modulus = grid.modulus();
    const auto values = estimates.values();
    const double inv_len = 1.0 / static_cast<double>(modulus);

    // cos(2 i x_k) = cos(2 pi (i k mod L) / L).
    std::vector<double> table(modulus);
    for (std::uint64_t t = 0; t < modulus; ++t) {
        table[t] = std::cos(2.0 * std::numbers::pi * static_cast<double>(t) *
                            inv_len);
    }

    DecodedPopulations out;
    out.num_qubits = grid.num_qubits();
    out.values.resize(m + 1);

    double sum = 0.0;
    for (double a : values) {
        sum += a;
    }
    out.values[0] = (1.0 - 2.0 * static_cast<double>(m) + 4.0 * sum) * inv_len;

    for (std::uint64_t i = 1; i <= m; ++i) {
        double acc = 0.0;
        std::uint64_t residue = i;
        for (std::uint64_t k = 1; k <= m; ++k) {
            acc += values[k - 1] * table[residue];
            residue += i;
            if (residue >= modulus) {
                residue -= modulus;
            }
        }
        out.values[i] = 4.0 * (1.0 + 2.0 * acc) * inv_len;
    }
    return out;
}

DecodedPopulations decode_fast(const AncillaEstimates &estimates) {
    const Grid &grid = estimates.grid();
    const std::uint64_t m = grid.points();
    const std::uint64_t modulus = grid.modulus();
    const auto values = estimates.values();
    const double inv_len = 1.0 / static_cast<double>(modulus);

    // y_0 = 0, y_k = A_k for k = 1..m; C_i = sum_k A_k cos(2 pi i k / L).
    std::vector<double> sequence(m + 1, 0.0);
    for (std::uint64_t k = 1; k <= m; ++k) {
        sequence[k] = values[k - 1];
    }
    const std::vector<double> sums =
        fourier::cosine_sums(sequence, static_cast<std::size_t>(modulus));

    DecodedPopulations out;
    out.num_qubits = grid.num_qubits();
    out.values.resize(m + 1);
    double sum = 0.0;
    for (double a : values) {
        sum += a;
    }
    out.values[0] = (1.0 - 2.0 * static_cast<double>(m) + 4.0 * sum) * inv_len;
    for (std::uint64_t i = 1; i <= m; ++i) {
        out.values[i] = 4.0 * (1.0 + 2.0 * sums[i]) * inv_len;
    }
    return out;
}

DecodedPopulations decode(const AncillaEstimates &estimates) {
    return estimates.grid().points() < kFastDecodeThreshold
               ? decode_naive(estimates)
               : decode_fast(estimates);
}

double tv_error(std::span<const double> decoded, std::span<const double> truth) {
    if (decoded.size() != truth.size()) {
        throw std::invalid_argument("tv_error: dimension mismatch");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < decoded.size(); ++i) {
        total += std::abs(decoded[i] - truth[i]);
    }
    return 0.5 * total;
}

double tv_error(const DecodedPopulations &decoded, std::span<const double> truth) {
    return tv_error(std::span<const double>(decoded.values), truth);
}

double tv_error(const DecodedPopulations &decoded, const SparsePopulations &truth) {
    if (decoded.num_qubits != truth.num_qubits() ||
        decoded.values.size() != (std::size_t{1} << decoded.num_qubits)) {
        throw std::invalid_argument("tv_error: dimension mismatch");
    }
    double total = 0.0;
    auto it = truth.entries().begin();
    const auto end = truth.entries().end();
    for (std::size_t i = 0; i < decoded.values.size(); ++i) {
        double w = 0.0;
        if (it != end && it->first == i) {
            w = it->second;
            ++it;
        }
        total += std::abs(decoded.values[i] - w);
    }
    return 0.5 * total;
}

std::vector<double> clip_and_renormalize(std::span<const double> values) {
    std::vector<double> out;
    out.reserve(values.size());
    double total = 0.0;
    for (double v : values) {
        out.push_back(v > 0.0 ? v : 0.0);
        total += out.back();
    }
    if (total <= 0.0) {
        throw std::invalid_argument("no positive mass left after clipping");
    }
    for (double &v : out) {
        v /= total;
    }
    return out;
}

} // namespace compread
