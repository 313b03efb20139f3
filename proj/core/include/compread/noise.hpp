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
 * Readout bit-flip and gate depolarizing noise.
 *
 * Gate noise is carried as a scalar fidelity f = (1 - gamma)^G. The decoder
 * only sees the ancilla marginal, and the maximally mixed state has ancilla
 * marginal 1/2 whatever the register size, so the depolarized ancilla
 * probability is exactly f A + (1 - f) / 2.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace compread {

/// Per-qubit bit-flip readout error. e0 = P(read 1 | 0), e1 = P(read 0 | 1).
class ReadoutErrorModel {
  public:
    /// Noise-free readout.
    ReadoutErrorModel() = default;

    static ReadoutErrorModel symmetric(double xi);
    static ReadoutErrorModel asymmetric(double e0, double e1);

    [[nodiscard]] double e0() const noexcept { return e0_; }
    [[nodiscard]] double e1() const noexcept { return e1_; }
    [[nodiscard]] bool is_symmetric() const noexcept { return symmetric_; }
    [[nodiscard]] bool is_noiseless() const noexcept {
        return e0_ == 0.0 && e1_ == 0.0;
    }

    /// Rates multiplied by k, keeping the symmetry tag.
    [[nodiscard]] ReadoutErrorModel scaled(double k) const;

  private:
    ReadoutErrorModel(double e0, double e1, bool symmetric);

    double e0_ = 0.0;
    double e1_ = 0.0;
    bool symmetric_ = true;
};

struct GateNoiseModel {
    double gamma = 0.0;
    std::optional<std::uint64_t> gate_count_override;

    /// Throws std::invalid_argument unless gamma is in [0, 1).
    void validate() const;
};

struct DeviceProfile {
    std::string name;
    double gamma;
    double xi;
    std::optional<double> e0;
    std::optional<double> e1;

    [[nodiscard]] ReadoutErrorModel symmetric_readout() const;
    /// Throws std::invalid_argument when the asymmetric rates were not
    /// published for this device.
    [[nodiscard]] ReadoutErrorModel asymmetric_readout() const;
};

/// f = (1 - gamma)^G.
double depolarizing_fidelity(double gamma, std::uint64_t gate_count);

/// Probability of reading 0 on the ancilla:
/// (1 - e0) A_dep + e1 (1 - A_dep), A_dep = f A + (1 - f) / 2.
double noisy_ancilla_probability(double ideal, const GateNoiseModel &gate,
                                 const ReadoutErrorModel &readout,
                                 std::uint64_t gate_count);

/// Same map with the fidelity already computed.
double noisy_ancilla_probability(double ideal, double fidelity,
                                 const ReadoutErrorModel &readout) noexcept;

/// Q^{(x)n} p by n in-place single-qubit sweeps. Q has columns
/// (1 - e0, e0) and (e1, 1 - e1). Throws std::invalid_argument unless
/// populations.size() == 2^n.
std::vector<double> apply_readout_transition(std::span<const double> populations,
                                             const ReadoutErrorModel &model,
                                             unsigned num_qubits);

/// gamma = e / (1 - 1/D^2). Throws std::invalid_argument for D < 2.
double gate_error_to_depolarizing(double gate_error, double dimension);

/// Published device rates; names are "zuchongzhi-2.0", "zuchongzhi-2.1",
/// "sycamore-2019", "sycamore-2021", "h1-2".
const DeviceProfile &device_profile(std::string_view name);
std::span<const DeviceProfile> device_profiles() noexcept;

} // namespace compread
