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
 * Encoding circuit plans and a small statevector simulator that checks
 * them against the closed-form ancilla probability.
 *
 * Sites 0..n-1 start with data qubit j on site j; the ancilla starts on
 * site n. A controlled rotation with angle t maps the ancilla
 * |0> -> cos t |0> + sin t |1> when its control reads 1. Data qubit j
 * controls angle 2^j x, so basis state |i> accumulates a total angle i x.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "compread/state.hpp"

namespace compread {

enum class Architecture {
    FullyConnected,      ///< one controlled rotation per data qubit
    NearestNeighborWalk, ///< ancilla walks a linear chain via swaps
    PaperCount,          ///< gate and depth accounting only, no gate list
};

std::string_view to_string(Architecture arch) noexcept;

/// Accepts "fully_connected", "nearest_neighbor_walk", "paper_count".
/// Throws std::invalid_argument for anything else.
Architecture parse_architecture(std::string_view name);

/// Two-qubit gates the architecture spends on an n-qubit encoding:
/// n, 2n - 1 and n(n + 1) / 2 respectively.
std::uint64_t default_gate_count(Architecture arch, unsigned num_qubits);

enum class GateKind { ControlledRotation, Swap };

struct Gate {
    GateKind kind;
    unsigned first;  ///< control site for rotations
    unsigned second; ///< ancilla site for rotations
    std::optional<double> angle;
};

struct CircuitPlan {
    Architecture architecture;
    unsigned num_qubits;
    double x;
    std::vector<Gate> gates;
    std::uint64_t two_qubit_count;
    unsigned depth;
    unsigned ancilla_site; ///< where the ancilla ends up
};

/// Rotation angles are reduced mod 2 pi before emission.
CircuitPlan build_encoding_circuit(unsigned num_qubits, double x,
                                   Architecture arch);

/// Ancilla |0> probability after applying plan to |psi>|0>. Throws
/// std::invalid_argument for a PaperCount plan or mismatched sizes.
double simulate_circuit_ancilla(const AmplitudeState &state,
                                const CircuitPlan &plan);

nlohmann::json circuit_to_json(const CircuitPlan &plan);

} // namespace compread
