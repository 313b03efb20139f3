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
 * Input states: dense amplitude vectors and sparse population maps.
 *
 * Index convention, used everywhere in the library: basis index
 * i = sum_j b_j 2^j, i.e. qubit j carries bit weight 2^j.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "compread/rng.hpp"

namespace compread {

using Amplitude = std::complex<double>;

/// Basis index of arbitrary width; the sparse path supports n in the
/// thousands.
using BasisIndex = boost::multiprecision::cpp_int;

/// Largest qubit count for which dense vectors are allocated by default.
inline constexpr unsigned kDefaultDenseCap = 24;

/// Normalization tolerance for states and population vectors.
inline constexpr double kNormTolerance = 1e-10;

/// Dense pure state over n qubits. Immutable after construction.
class AmplitudeState {
  public:
    /// Throws std::invalid_argument unless amplitudes has length 2^n and
    /// unit norm within kNormTolerance.
    AmplitudeState(unsigned num_qubits, std::vector<Amplitude> amplitudes);

    [[nodiscard]] unsigned num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept {
        return amplitudes_;
    }

  private:
    unsigned num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// Populations |alpha_i|^2 stored only on their support.
class SparsePopulations {
  public:
    /// Throws std::invalid_argument on out-of-range indices, negative or
    /// non-finite weights, or a total weight not within kNormTolerance of 1.
    SparsePopulations(unsigned num_qubits, std::map<BasisIndex, double> entries);

    static SparsePopulations basis(unsigned num_qubits, const BasisIndex &index);

    [[nodiscard]] unsigned num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] const std::map<BasisIndex, double> &entries() const noexcept {
        return entries_;
    }
    [[nodiscard]] std::size_t support_size() const noexcept {
        return entries_.size();
    }
    /// Weight at index, zero off the support.
    [[nodiscard]] double weight(const BasisIndex &index) const;

    /// Dense population vector; throws std::length_error if n > dense_cap.
    [[nodiscard]] std::vector<double>
    to_dense(unsigned dense_cap = kDefaultDenseCap) const;

  private:
    unsigned num_qubits_;
    std::map<BasisIndex, double> entries_;
};

/// Tagged state descriptions accepted by make_state.
namespace spec {
struct Basis {
    BasisIndex index;
};
struct AllOnes {};
struct AllZeros {};
struct Uniform {};
struct Haar {
    std::uint64_t seed;
};
struct ExplicitAmplitudes {
    std::vector<Amplitude> amplitudes;
};
struct ExplicitPopulations {
    std::map<BasisIndex, double> weights;
};
} // namespace spec

using StateSpec =
    std::variant<spec::Basis, spec::AllOnes, spec::AllZeros, spec::Uniform,
                 spec::Haar, spec::ExplicitAmplitudes, spec::ExplicitPopulations>;

using State = std::variant<AmplitudeState, SparsePopulations>;

/// Build a normalized state. Basis, AllOnes, AllZeros and ExplicitPopulations
/// give SparsePopulations (no size cap); the rest give a dense
/// AmplitudeState and require n <= dense_cap.
State make_state(const StateSpec &spec, unsigned num_qubits,
                 unsigned dense_cap = kDefaultDenseCap);

/// Haar-random pure state: 2^n complex standard normals, normalized.
AmplitudeState haar_state(unsigned num_qubits, CounterRng &rng);

/// |alpha_i|^2 for every basis index.
std::vector<double> populations(const AmplitudeState &state);

/// Dense populations of either representation.
std::vector<double> dense_populations(const State &state,
                                      unsigned dense_cap = kDefaultDenseCap);

[[nodiscard]] unsigned num_qubits(const State &state) noexcept;

/// Short label such as "haar", "all_ones" or "basis:5".
std::string describe(const StateSpec &spec);

/// 2^n as a BasisIndex.
BasisIndex basis_dimension(unsigned num_qubits);

} // namespace compread
