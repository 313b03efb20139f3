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
 * Shot-budget and error-bound calculators.
 */
#pragma once

#include <cstdint>

#include "compread/noise.hpp"
#include "compread/state.hpp"

namespace compread {

struct BudgetQuery {
    double epsilon; ///< accuracy target in (0, 1)
    double eta;     ///< failure probability in (0, 1)
    std::uint64_t m;

    void validate() const;
};

/// Shots per grid point that guarantee P(|p_i - w_i| >= eps) <= eta:
///
///   ceil( (48 m^2 + 4 m (2m+1) eps) / ((2m+1)^2 eps^2) * ln(m / eta) )
std::uint64_t theorem1_shots(const BudgetQuery &query);

/// Uniform bound 16 m / ((2m+1)^2 N) on Var(p_i) for noiseless sampling.
double variance_bound(std::uint64_t m, std::uint64_t shots_per_grid);

/// Exact direct-readout error of a basis state. A basis state with z zero
/// bits and o one bits reads correctly with probability
/// (1 - e0)^z (1 - e1)^o, and its error is one minus that. The symmetric
/// case reduces to 1 - (1 - xi)^n.
double direct_error_closed_form(unsigned num_qubits,
                                const ReadoutErrorModel &model,
                                const BasisIndex &index);

/// Termwise evaluation of
/// 1/2 (1 - (1-xi)^n + sum_{k=1..n} C(n,k) (1-xi)^{n-k} xi^k).
double direct_error_binomial_sum(unsigned num_qubits, double xi);

} // namespace compread
