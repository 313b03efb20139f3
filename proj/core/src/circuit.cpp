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

#include "compread/circuit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace compread {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// 2^j x mod 2 pi for j = 0..n-1, in [0, 2 pi). ldexp is exact and the
// library sin/cos reduce their argument against the true pi, so no error
// from a rounded period builds up for large j.
std::vector<double> doubled_angles(unsigned num_qubits, double x) {
    std::vector<double> angles(num_qubits);
    for (unsigned j = 0; j < num_qubits; ++j) {
        const double theta = std::ldexp(x, static_cast<int>(j));
        double reduced = std::atan2(std::sin(theta), std::cos(theta));
        if (reduced < 0.0) {
            reduced += kTwoPi;
        }
        angles[j] = reduced < kTwoPi ? reduced : 0.0;
    }
    return angles;
}

void apply_controlled_rotation(std::vector<Amplitude> &amps, unsigned control,
                               unsigned target, double angle) {
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        if ((idx & cmask) != 0 && (idx & tmask) == 0) {
            const Amplitude a0 = amps[idx];
            const Amplitude a1 = amps[idx | tmask];
            amps[idx] = c * a0 - s * a1;
            amps[idx | tmask] = s * a0 + c * a1;
        }
    }
}

void apply_swap(std::vector<Amplitude> &amps, unsigned a, unsigned b) {
    const std::size_t amask = std::size_t{1} << a;
    const std::size_t bmask = std::size_t{1} << b;
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        if ((idx & amask) != 0 && (idx & bmask) == 0) {
            std::swap(amps[idx], amps[(idx & ~amask) | bmask]);
        }
    }
}

} // namespace

std::string_view to_string(Architecture arch) noexcept {
    switch (arch) {
    case Architecture::FullyConnected:
        return "fully_connected";
    case Architecture::NearestNeighborWalk:
        return "nearest_neighbor_walk";
    case Architecture::PaperCount:
        return "paper_count";
    }
    return "unknown";
}

Architecture parse_architecture(std::string_view name) {
    if (name == "fully_connected") {
        return Architecture::FullyConnected;
    }
    if (name == "nearest_neighbor_walk") {
        return Architecture::NearestNeighborWalk;
    }
    if (name == "paper_count") {
        return Architecture::PaperCount;
    }
    throw std::invalid_argument("unknown architecture '" + std::string(name) + "'");
}

std::uint64_t default_gate_count(Architecture arch, unsigned num_qubits) {
    const std::uint64_t n = num_qubits;
    switch (arch) {
    case Architecture::FullyConnected:
        return n;
    case Architecture::NearestNeighborWalk:
        return n == 0 ? 0 : 2 * n - 1;
    case Architecture::PaperCount:
        return n * (n + 1) / 2;
    }
    throw std::invalid_argument("unknown architecture");
}

CircuitPlan build_encoding_circuit(unsigned num_qubits, double x,
                                   Architecture arch) {
    if (num_qubits == 0) {
        throw std::invalid_argument("encoding circuit requires n >= 1");
    }
    CircuitPlan plan{arch, num_qubits, x, {}, default_gate_count(arch, num_qubits),
                     0, num_qubits};

    switch (arch) {
    case Architecture::FullyConnected: {
        const auto angles = doubled_angles(num_qubits, x);
        for (unsigned j = 0; j < num_qubits; ++j) {
            plan.gates.push_back(
                {GateKind::ControlledRotation, j, num_qubits, angles[j]});
        }
        // Every gate targets the ancilla, so they serialize.
        plan.depth = num_qubits;
        break;
    }
    case Architecture::NearestNeighborWalk: {
        const auto angles = doubled_angles(num_qubits, x);
        unsigned ancilla = num_qubits;
        for (unsigned j = num_qubits; j-- > 0;) {
            plan.gates.push_back(
                {GateKind::ControlledRotation, j, ancilla, angles[j]});
            if (j > 0) {
                plan.gates.push_back({GateKind::Swap, j, ancilla, std::nullopt});
                ancilla = j;
            }
        }
        plan.ancilla_site = ancilla;
        plan.depth = 2 * num_qubits - 1;
        break;
    }
    case Architecture::PaperCount:
        // The published nearest-neighbor compilation reports depth 2n - 1.
        plan.depth = 2 * num_qubits - 1;
        break;
    }
    return plan;
}

double simulate_circuit_ancilla(const AmplitudeState &state,
                                const CircuitPlan &plan) {
    if (plan.architecture == Architecture::PaperCount) {
        throw std::invalid_argument("paper_count plans carry no gates to simulate");
    }
    if (state.num_qubits() != plan.num_qubits) {
        throw std::invalid_argument("state and circuit qubit counts differ");
    }
    const unsigned n = plan.num_qubits;
    std::vector<Amplitude> amps(std::size_t{1} << (n + 1), Amplitude{0.0, 0.0});
    const auto input = state.amplitudes();
    std::copy(input.begin(), input.end(), amps.begin());

    for (const Gate &gate : plan.gates) {
        if (gate.kind == GateKind::ControlledRotation) {
            apply_controlled_rotation(amps, gate.first, gate.second,
                                      gate.angle.value_or(0.0));
        } else {
            apply_swap(amps, gate.first, gate.second);
        }
    }

    const std::size_t amask = std::size_t{1} << plan.ancilla_site;
    double p0 = 0.0;
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        if ((idx & amask) == 0) {
            p0 += std::norm(amps[idx]);
        }
    }
    return p0;
}

nlohmann::json circuit_to_json(const CircuitPlan &plan) {
    nlohmann::json gates = nlohmann::json::array();
    for (const Gate &gate : plan.gates) {
        nlohmann::json g;
        g["kind"] = gate.kind == GateKind::ControlledRotation ? "controlled_rotation"
                                                              : "swap";
        g["qubits"] = {gate.first, gate.second};
        g["angle"] = gate.angle ? nlohmann::json(*gate.angle) : nlohmann::json();
        gates.push_back(std::move(g));
    }
    return {{"architecture", to_string(plan.architecture)},
            {"n", plan.num_qubits},
            {"x", plan.x},
            {"two_qubit_count", plan.two_qubit_count},
            {"depth", plan.depth},
            {"ancilla_site", plan.ancilla_site},
            {"gates", std::move(gates)}};
}

} // namespace compread
