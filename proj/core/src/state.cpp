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

#include "compread/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace compread {

namespace {

void check_qubits(unsigned num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("qubit count must be positive");
    }
}

void check_dense(unsigned num_qubits, unsigned dense_cap) {
    check_qubits(num_qubits);
    if (num_qubits > dense_cap || num_qubits >= 63) {
        throw std::length_error("dense state requested for n=" +
                                std::to_string(num_qubits) +
                                " above the dense cap of " +
                                std::to_string(dense_cap));
    }
}

AmplitudeState normalized(unsigned num_qubits, std::vector<Amplitude> amps) {
    double norm_sq = 0.0;
    for (const auto &a : amps) {
        norm_sq += std::norm(a);
    }
    if (!std::isfinite(norm_sq) || norm_sq <= 0.0) {
        throw std::invalid_argument("amplitudes cannot be normalized");
    }
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (auto &a : amps) {
        a *= scale;
    }
    return AmplitudeState(num_qubits, std::move(amps));
}

} // namespace

BasisIndex basis_dimension(unsigned num_qubits) {
    BasisIndex dim = 1;
    dim <<= num_qubits;
    return dim;
}

AmplitudeState::AmplitudeState(unsigned num_qubits,
                               std::vector<Amplitude> amplitudes)
    : num_qubits_{num_qubits}, amplitudes_{std::move(amplitudes)} {
    check_qubits(num_qubits);
    if (num_qubits >= 63 || amplitudes_.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("amplitude vector length must be 2^n");
    }
    double norm_sq = 0.0;
    for (const auto &a : amplitudes_) {
        norm_sq += std::norm(a);
    }
    if (!(std::abs(norm_sq - 1.0) <= kNormTolerance)) {
        throw std::invalid_argument("amplitudes are not normalized");
    }
}

SparsePopulations::SparsePopulations(unsigned num_qubits,
                                     std::map<BasisIndex, double> entries)
    : num_qubits_{num_qubits}, entries_{std::move(entries)} {
    check_qubits(num_qubits);
    const BasisIndex dim = basis_dimension(num_qubits);
    double total = 0.0;
    for (const auto &[index, w] : entries_) {
        if (index < 0 || index >= dim) {
            throw std::out_of_range("basis index out of range for n=" +
                                    std::to_string(num_qubits));
        }
        if (!std::isfinite(w) || w < 0.0 || w > 1.0 + kNormTolerance) {
            throw std::invalid_argument("population weight outside [0, 1]");
        }
        total += w;
    }
    if (!(std::abs(total - 1.0) <= kNormTolerance)) {
        throw std::invalid_argument("populations do not sum to 1");
    }
}

SparsePopulations SparsePopulations::basis(unsigned num_qubits,
                                           const BasisIndex &index) {
    return SparsePopulations(num_qubits, {{index, 1.0}});
}

double SparsePopulations::weight(const BasisIndex &index) const {
    const auto it = entries_.find(index);
    return it == entries_.end() ? 0.0 : it->second;
}

std::vector<double> SparsePopulations::to_dense(unsigned dense_cap) const {
    check_dense(num_qubits_, dense_cap);
    std::vector<double> dense(std::size_t{1} << num_qubits_, 0.0);
    for (const auto &[index, w] : entries_) {
        dense[index.convert_to<std::size_t>()] = w;
    }
    return dense;
}

AmplitudeState haar_state(unsigned num_qubits, CounterRng &rng) {
    check_qubits(num_qubits);
    if (num_qubits >= 63) {
        throw std::length_error("Haar state too large to allocate");
    }
    std::vector<Amplitude> amps(std::size_t{1} << num_qubits);
    for (auto &a : amps) {
        const auto [re, im] = rng.normal_pair();
        a = Amplitude{re, im};
    }
    return normalized(num_qubits, std::move(amps));
}

State make_state(const StateSpec &spec, unsigned num_qubits, unsigned dense_cap) {
    check_qubits(num_qubits);
    return std::visit(
        [&](const auto &s) -> State {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, spec::Basis>) {
                return SparsePopulations::basis(num_qubits, s.index);
            } else if constexpr (std::is_same_v<T, spec::AllOnes>) {
                return SparsePopulations::basis(num_qubits,
                                                basis_dimension(num_qubits) - 1);
            } else if constexpr (std::is_same_v<T, spec::AllZeros>) {
                return SparsePopulations::basis(num_qubits, 0);
            } else if constexpr (std::is_same_v<T, spec::Uniform>) {
                check_dense(num_qubits, dense_cap);
                const std::size_t dim = std::size_t{1} << num_qubits;
                return AmplitudeState(
                    num_qubits,
                    std::vector<Amplitude>(
                        dim, Amplitude{1.0 / std::sqrt(static_cast<double>(dim)),
                                       0.0}));
            } else if constexpr (std::is_same_v<T, spec::Haar>) {
                check_dense(num_qubits, dense_cap);
                CounterRng rng(derive_key(
                    {s.seed, static_cast<std::uint64_t>(StreamDomain::State),
                     num_qubits}));
                return haar_state(num_qubits, rng);
            } else if constexpr (std::is_same_v<T, spec::ExplicitAmplitudes>) {
                check_dense(num_qubits, dense_cap);
                return normalized(num_qubits, s.amplitudes);
            } else {
                double total = 0.0;
                for (const auto &[index, w] : s.weights) {
                    if (!std::isfinite(w) || w < 0.0) {
                        throw std::invalid_argument("negative population weight");
                    }
                    total += w;
                }
                if (!(total > 0.0) || !std::isfinite(total)) {
                    throw std::invalid_argument("populations cannot be normalized");
                }
                std::map<BasisIndex, double> weights;
                for (const auto &[index, w] : s.weights) {
                    if (w > 0.0) {
                        weights.emplace(index, w / total);
                    }
                }
                return SparsePopulations(num_qubits, std::move(weights));
            }
        },
        spec);
}

std::vector<double> populations(const AmplitudeState &state) {
    std::vector<double> out;
    out.reserve(state.size());
    for (const auto &a : state.amplitudes()) {
        out.push_back(std::norm(a));
    }
    return out;
}

std::vector<double> dense_populations(const State &state, unsigned dense_cap) {
    if (const auto *dense = std::get_if<AmplitudeState>(&state)) {
        return populations(*dense);
    }
    return std::get<SparsePopulations>(state).to_dense(dense_cap);
}

unsigned num_qubits(const State &state) noexcept {
    return std::visit([](const auto &s) { return s.num_qubits(); }, state);
}

std::string describe(const StateSpec &spec) {
    return std::visit(
        [](const auto &s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, spec::Basis>) {
                return "basis:" + s.index.str();
            } else if constexpr (std::is_same_v<T, spec::AllOnes>) {
                return "all_ones";
            } else if constexpr (std::is_same_v<T, spec::AllZeros>) {
                return "all_zeros";
            } else if constexpr (std::is_same_v<T, spec::Uniform>) {
                return "uniform";
            } else if constexpr (std::is_same_v<T, spec::Haar>) {
                return "haar";
            } else if constexpr (std::is_same_v<T, spec::ExplicitAmplitudes>) {
                return "amplitudes";
            } else {
                return "populations";
            }
        },
        spec);
}

} // namespace compread
