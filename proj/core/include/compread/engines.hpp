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
 * End-to-end readout pipelines.
 *
 * Direct readout measures every data qubit; its only noise is the
 * per-qubit bit flip. Compression readout runs the encoding circuit at
 * every grid point, measures the ancilla, and decodes. Both come in an
 * exact (infinite-shot) and a sampled form.
 *
 * Sampled engines draw from substreams keyed by (master seed, repetition,
 * domain, index): the compression engine uses one substream per grid
 * point, the direct engine a single one. Results are therefore identical
 * under any scheduling of repetitions or grid points.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "compread/circuit.hpp"
#include "compread/noise.hpp"
#include "compread/state.hpp"

namespace compread {

/// Even split of a shot budget over m grid points; the first
/// (total mod m) points get one extra shot.
struct ShotPlan {
    std::uint64_t total = 0;
    std::vector<std::uint64_t> per_grid;

    /// Throws std::invalid_argument if total < m.
    static ShotPlan split(std::uint64_t total, std::uint64_t m);
};

enum class Method { Direct, Compression };
enum class Mode { Exact, Sampled };

std::string_view to_string(Method method) noexcept;
std::string_view to_string(Mode mode) noexcept;

struct SeedPath {
    std::uint64_t master = 0;
    std::uint64_t repetition = 0;
};

/// Noise and circuit choices for compression readout.
struct CompressionSetup {
    ReadoutErrorModel readout;
    GateNoiseModel gate;
    Architecture architecture = Architecture::FullyConnected;

    /// Override if set, else the architecture's count.
    [[nodiscard]] std::uint64_t gate_count(unsigned num_qubits) const;
};

struct ReadoutResult {
    Method method = Method::Direct;
    Mode mode = Mode::Exact;
    unsigned num_qubits = 0;
    /// Decoded populations (compression) or read distribution (direct).
    /// Empty for the sparse closed-form engines.
    std::vector<double> distribution;
    double tv_error = 0.0;
    ReadoutErrorModel readout;
    double gamma = 0.0;
    std::optional<Architecture> architecture;
    std::uint64_t gate_count = 0;
    std::optional<std::uint64_t> shots;
    std::optional<SeedPath> seed;
};

nlohmann::json to_json(const ReadoutResult &result, bool with_distribution = true);

/// Q^{(x)n} a and its distance from a.
ReadoutResult direct_readout_exact(std::span<const double> populations,
                                   const ReadoutErrorModel &readout);

/// Closed form for basis states at any n; other sparse inputs are
/// densified when n <= dense_cap. Throws std::length_error otherwise.
ReadoutResult direct_readout_exact(const SparsePopulations &populations,
                                   const ReadoutErrorModel &readout,
                                   unsigned dense_cap = kDefaultDenseCap);

/// One multinomial draw of `shots` outcomes from Q^{(x)n} a.
ReadoutResult direct_readout_sampled(std::span<const double> populations,
                                     const ReadoutErrorModel &readout,
                                     std::uint64_t shots, SeedPath seed);

/// Enumerates all m grid points. Throws std::length_error for n above the
/// dense cap.
ReadoutResult compression_readout_exact(std::span<const double> populations,
                                        const CompressionSetup &setup);

/// Binomial ancilla counts per grid point under a ShotPlan. Throws
/// std::invalid_argument when total_shots < m.
ReadoutResult compression_readout_sampled(std::span<const double> populations,
                                          const CompressionSetup &setup,
                                          std::uint64_t total_shots, SeedPath seed);

/// Largest support handled by the sparse closed form.
inline constexpr std::size_t kMaxSparseSupport = std::size_t{1} << 20U;

/// Exact compression error without enumerating the grid.
///
/// The noisy estimates are affine in the ideal ones, A~ = a A + b with
/// a = (1 - e0 - e1) f and b = e1 + (1 - e0 - e1)(1 - f)/2, and the decoder
/// is affine too. Hence p_i = a w_i + kappa for i != 0 and
/// p_0 = a w_0 + c0 with two scalars kappa and c0, and the error needs only
/// the support plus one aggregate term for everything off it.
ReadoutResult compression_readout_sparse_exact(const SparsePopulations &populations,
                                               const ReadoutErrorModel &readout,
                                               double gamma, std::uint64_t gate_count,
                                               unsigned dense_cap = kDefaultDenseCap);

} // namespace compread
