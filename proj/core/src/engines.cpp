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

#include "compread/engines.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "compread/bounds.hpp"
#include "compread/decoder.hpp"
#include "compread/grid.hpp"
#include "compread/rng.hpp"

namespace compread {

namespace {

unsigned qubits_for_length(std::size_t length) {
    if (length < 2 || !std::has_single_bit(length)) {
        throw std::invalid_argument("population vector length must be 2^n with n >= 1");
    }
    return static_cast<unsigned>(std::countr_zero(length));
}

std::vector<double> noisy_profile(std::span<const double> populations,
                                  const Grid &grid, const CompressionSetup &setup,
                                  std::uint64_t gate_count) {
    setup.gate.validate();
    const double fidelity = depolarizing_fidelity(setup.gate.gamma, gate_count);
    std::vector<double> profile = ancilla_profile(populations, grid);
    for (double &a : profile) {
        a = std::clamp(noisy_ancilla_probability(a, fidelity, setup.readout), 0.0, 1.0);
    }
    return profile;
}

ReadoutResult compression_result(Mode mode, unsigned n, const CompressionSetup &setup,
                                 std::uint64_t gate_count) {
    ReadoutResult result;
    result.method = Method::Compression;
    result.mode = mode;
    result.num_qubits = n;
    result.readout = setup.readout;
    result.gamma = setup.gate.gamma;
    result.architecture = setup.architecture;
    result.gate_count = gate_count;
    return result;
}

} // namespace

ShotPlan ShotPlan::split(std::uint64_t total, std::uint64_t m) {
    if (m == 0) {
        throw std::invalid_argument("shot plan needs at least one grid point");
    }
    if (total < m) {
        throw std::invalid_argument("total shots " + std::to_string(total) +
                                    " below grid size m=" + std::to_string(m));
    }
    ShotPlan plan;
    plan.total = total;
    plan.per_grid.assign(m, total / m);
    for (std::uint64_t k = 0; k < total % m; ++k) {
        ++plan.per_grid[k];
    }
    return plan;
}

std::string_view to_string(Method method) noexcept {
    return method == Method::Direct ? "direct" : "compression";
}

std::string_view to_string(Mode mode) noexcept {
    return mode == Mode::Exact ? "exact" : "sampled";
}

std::uint64_t CompressionSetup::gate_count(unsigned num_qubits) const {
    return gate.gate_count_override.value_or(
        default_gate_count(architecture, num_qubits));
}

nlohmann::json to_json(const ReadoutResult &result, bool with_distribution) {
    nlohmann::json j;
    j["method"] = to_string(result.method);
    j["mode"] = to_string(result.mode);
    j["n"] = result.num_qubits;
    j["tv_error"] = result.tv_error;
    j["readout"] = {{"symmetric", result.readout.is_symmetric()},
                    {"e0", result.readout.e0()},
                    {"e1", result.readout.e1()}};
    j["gamma"] = result.gamma;
    j["architecture"] = result.architecture
                            ? nlohmann::json(to_string(*result.architecture))
                            : nlohmann::json();
    j["gate_count"] = result.gate_count;
    j["shots"] = result.shots ? nlohmann::json(*result.shots) : nlohmann::json();
    if (result.seed) {
        j["seed"] = {{"master", result.seed->master},
                     {"repetition", result.seed->repetition}};
    } else {
        j["seed"] = nullptr;
    }
    if (with_distribution) {
        j["distribution"] = result.distribution;
    }
    return j;
}

ReadoutResult direct_readout_exact(std::span<const double> populations,
                                   const ReadoutErrorModel &readout) {
    const unsigned n = qubits_for_length(populations.size());
    ReadoutResult result;
    result.method = Method::Direct;
    result.mode = Mode::Exact;
    result.num_qubits = n;
    result.readout = readout;
    result.distribution = apply_readout_transition(populations, readout, n);
    result.tv_error = tv_error(result.distribution, populations);
    return result;
}

ReadoutResult direct_readout_exact(const SparsePopulations &populations,
                                   const ReadoutErrorModel &readout,
                                   unsigned dense_cap) {
    const unsigned n = populations.num_qubits();
    if (populations.support_size() == 1) {
        ReadoutResult result;
        result.method = Method::Direct;
        result.mode = Mode::Exact;
        result.num_qubits = n;
        result.readout = readout;
        result.tv_error = direct_error_closed_form(
            n, readout, populations.entries().begin()->first);
        return result;
    }
    if (n > dense_cap) {
        throw std::length_error(
            "direct readout of a non-basis sparse state needs n <= dense cap");
    }
    return direct_readout_exact(populations.to_dense(dense_cap), readout);
}

ReadoutResult direct_readout_sampled(std::span<const double> populations,
                                     const ReadoutErrorModel &readout,
                                     std::uint64_t shots, SeedPath seed) {
    if (shots == 0) {
        throw std::invalid_argument("direct readout needs at least one shot");
    }
    const unsigned n = qubits_for_length(populations.size());
    const std::vector<double> noisy = apply_readout_transition(populations, readout, n);
    CounterRng rng(substream_key(seed.master, seed.repetition, StreamDomain::Direct, 0));
    const std::vector<std::uint64_t> counts = sample_multinomial(rng, shots, noisy);

    ReadoutResult result;
    result.method = Method::Direct;
    result.mode = Mode::Sampled;
    result.num_qubits = n;
    result.readout = readout;
    result.shots = shots;
    result.seed = seed;
    result.distribution.resize(counts.size());
    const double inv = 1.0 / static_cast<double>(shots);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        result.distribution[i] = static_cast<double>(counts[i]) * inv;
    }
    result.tv_error = tv_error(result.distribution, populations);
    return result;
}

ReadoutResult compression_readout_exact(std::span<const double> populations,
                                        const CompressionSetup &setup) {
    const unsigned n = qubits_for_length(populations.size());
    const Grid grid(n);
    const std::uint64_t gates = setup.gate_count(n);
    AncillaEstimates estimates(grid, noisy_profile(populations, grid, setup, gates));
    DecodedPopulations decoded = decode(estimates);

    ReadoutResult result = compression_result(Mode::Exact, n, setup, gates);
    result.tv_error = tv_error(decoded, populations);
    result.distribution = std::move(decoded.values);
    return result;
}

ReadoutResult compression_readout_sampled(std::span<const double> populations,
                                          const CompressionSetup &setup,
                                          std::uint64_t total_shots, SeedPath seed) {
    const unsigned n = qubits_for_length(populations.size());
    const Grid grid(n);
    const ShotPlan plan = ShotPlan::split(total_shots, grid.points());
    const std::uint64_t gates = setup.gate_count(n);
    std::vector<double> probs = noisy_profile(populations, grid, setup, gates);

    for (std::uint64_t k = 1; k <= grid.points(); ++k) {
        CounterRng rng(
            substream_key(seed.master, seed.repetition, StreamDomain::Compression, k));
        const std::uint64_t shots = plan.per_grid[k - 1];
        const std::uint64_t zeros = sample_binomial(rng, shots, probs[k - 1]);
        probs[k - 1] = static_cast<double>(zeros) / static_cast<double>(shots);
    }
    AncillaEstimates estimates(grid, std::move(probs));
    DecodedPopulations decoded = decode(estimates);

    ReadoutResult result = compression_result(Mode::Sampled, n, setup, gates);
    result.shots = total_shots;
    result.seed = seed;
    result.tv_error = tv_error(decoded, populations);
    result.distribution = std::move(decoded.values);
    return result;
}

ReadoutResult compression_readout_sparse_exact(const SparsePopulations &populations,
                                               const ReadoutErrorModel &readout,
                                               double gamma, std::uint64_t gate_count,
                                               unsigned dense_cap) {
    const unsigned n = populations.num_qubits();
    if (populations.support_size() > kMaxSparseSupport) {
        if (n > dense_cap) {
            throw std::length_error("support too large for the sparse engine");
        }
        CompressionSetup setup{readout, {gamma, gate_count}, Architecture::FullyConnected};
        return compression_readout_exact(populations.to_dense(dense_cap), setup);
    }

    const double fidelity = depolarizing_fidelity(gamma, gate_count);
    const double contrast = 1.0 - readout.e0() - readout.e1();
    const double slope = contrast * fidelity;
    const double offset = readout.e1() + 0.5 * contrast * (1.0 - fidelity);

    // 1/L and m/L with L = 2^{n+1} - 1, written in t = 2^{-n} so they stay
    // finite for any n.
    const double t = std::ldexp(1.0, -static_cast<int>(n));
    const double inv_len = t / (2.0 - t);
    const double m_over_len = (1.0 - t) / (2.0 - t);

    const double zero_shift =
        (1.0 - slope) * (inv_len - 2.0 * m_over_len) + 4.0 * offset * m_over_len;
    const double kappa = 4.0 * (1.0 - slope - offset) * inv_len;

    double total = 0.0;
    double nonzero_support = 0.0;
    const double w0 = populations.weight(0);
    total += std::abs((slope - 1.0) * w0 + zero_shift);
    for (const auto &[index, w] : populations.entries()) {
        if (index == 0) {
            continue;
        }
        total += std::abs((slope - 1.0) * w + kappa);
        nonzero_support += 1.0;
    }
    // Every index outside support and zero decodes to kappa exactly.
    const double off_support = m_over_len - nonzero_support * inv_len;
    total += 4.0 * std::abs(1.0 - slope - offset) * off_support;

    ReadoutResult result;
    result.method = Method::Compression;
    result.mode = Mode::Exact;
    result.num_qubits = n;
    result.readout = readout;
    result.gamma = gamma;
    result.gate_count = gate_count;
    result.tv_error = 0.5 * total;
    return result;
}

} // namespace compread
