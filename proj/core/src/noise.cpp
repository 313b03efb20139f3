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

#include "compread/noise.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace compread {

namespace {

void check_rate(double rate, const char *what) {
    if (!(rate >= 0.0 && rate < 0.5)) {
        throw std::invalid_argument(std::string(what) +
                                    " readout flip rate must be in [0, 0.5)");
    }
}

// Simultaneous calibration data for five processors. gamma is converted
// from the two-qubit gate error with D = 4.
const std::array<DeviceProfile, 5> kProfiles = {{
    {"zuchongzhi-2.0", 0.006293, 0.0452, 0.0346, 0.0608},
    {"zuchongzhi-2.1", 0.0064, 0.0226, 0.0148, 0.0303},
    {"sycamore-2019", 0.006613, 0.038, 0.018, 0.051},
    {"sycamore-2021", 0.006613, 0.019, 0.009, 0.0255},
    {"h1-2", 0.002453, 0.0039, std::nullopt, std::nullopt},
}};

} // namespace

ReadoutErrorModel::ReadoutErrorModel(double e0, double e1, bool symmetric)
    : e0_{e0}, e1_{e1}, symmetric_{symmetric} {
    check_rate(e0, "e0");
    check_rate(e1, "e1");
}

ReadoutErrorModel ReadoutErrorModel::symmetric(double xi) {
    return {xi, xi, true};
}

ReadoutErrorModel ReadoutErrorModel::asymmetric(double e0, double e1) {
    return {e0, e1, false};
}

ReadoutErrorModel ReadoutErrorModel::scaled(double k) const {
    return {k * e0_, k * e1_, symmetric_};
}

void GateNoiseModel::validate() const {
    if (!(gamma >= 0.0 && gamma < 1.0)) {
        throw std::invalid_argument("depolarizing probability must be in [0, 1)");
    }
}

ReadoutErrorModel DeviceProfile::symmetric_readout() const {
    return ReadoutErrorModel::symmetric(xi);
}

ReadoutErrorModel DeviceProfile::asymmetric_readout() const {
    if (!e0 || !e1) {
        throw std::invalid_argument("asymmetric readout rates unavailable for " +
                                    name);
    }
    return ReadoutErrorModel::asymmetric(*e0, *e1);
}

double depolarizing_fidelity(double gamma, std::uint64_t gate_count) {
    GateNoiseModel{gamma, std::nullopt}.validate();
    if (gate_count == 0 || gamma == 0.0) {
        return 1.0;
    }
    return std::pow(1.0 - gamma, static_cast<double>(gate_count));
}

double noisy_ancilla_probability(double ideal, double fidelity,
                                 const ReadoutErrorModel &readout) noexcept {
    const double depolarized = fidelity * ideal + 0.5 * (1.0 - fidelity);
    return (1.0 - readout.e0()) * depolarized + readout.e1() * (1.0 - depolarized);
}

double noisy_ancilla_probability(double ideal, const GateNoiseModel &gate,
                                 const ReadoutErrorModel &readout,
                                 std::uint64_t gate_count) {
    if (!(ideal >= 0.0 && ideal <= 1.0)) {
        throw std::invalid_argument("ideal ancilla probability outside [0, 1]");
    }
    const double f = depolarizing_fidelity(
        gate.gamma, gate.gate_count_override.value_or(gate_count));
    return noisy_ancilla_probability(ideal, f, readout);
}

std::vector<double> apply_readout_transition(std::span<const double> populations,
                                             const ReadoutErrorModel &model,
                                             unsigned num_qubits) {
    if (num_qubits >= 63 || populations.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument(
            "population vector length is not 2^n for the given n");
    }
    std::vector<double> out(populations.begin(), populations.end());
    const double keep0 = 1.0 - model.e0();
    const double keep1 = 1.0 - model.e1();
    for (unsigned q = 0; q < num_qubits; ++q) {
        const std::size_t mask = std::size_t{1} << q;
        for (std::size_t idx = 0; idx < out.size(); ++idx) {
            if ((idx & mask) == 0) {
                const double p0 = out[idx];
                const double p1 = out[idx | mask];
                out[idx] = keep0 * p0 + model.e1() * p1;
                out[idx | mask] = model.e0() * p0 + keep1 * p1;
            }
        }
    }
    return out;
}

double gate_error_to_depolarizing(double gate_error, double dimension) {
    if (!(dimension >= 2.0)) {
        throw std::invalid_argument("Hilbert-space dimension must be at least 2");
    }
    if (!(gate_error >= 0.0 && gate_error < 1.0)) {
        throw std::invalid_argument("gate error must be in [0, 1)");
    }
    return gate_error / (1.0 - 1.0 / (dimension * dimension));
}

const DeviceProfile &device_profile(std::string_view name) {
    for (const auto &profile : kProfiles) {
        if (profile.name == name) {
            return profile;
        }
    }
    throw std::invalid_argument("unknown device profile '" + std::string(name) +
                                "'");
}

std::span<const DeviceProfile> device_profiles() noexcept { return kProfiles; }

} // namespace compread
