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

#include "compread/bounds.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/binomial.hpp>

namespace compread {

void BudgetQuery::validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("epsilon must be in (0, 1)");
    }
    if (!(eta > 0.0 && eta < 1.0)) {
        throw std::invalid_argument("eta must be in (0, 1)");
    }
    if (m == 0) {
        throw std::invalid_argument("grid size m must be positive");
    }
}

std::uint64_t theorem1_shots(const BudgetQuery &query) {
    query.validate();
    const auto m = static_cast<double>(query.m);
    const double len = 2.0 * m + 1.0;
    const double eps = query.epsilon;
    const double factor =
        (48.0 * m * m + 4.0 * m * len * eps) / (len * len * eps * eps);
    return static_cast<std::uint64_t>(std::ceil(factor * std::log(m / query.eta)));
}

double variance_bound(std::uint64_t m, std::uint64_t shots_per_grid) {
    if (shots_per_grid == 0) {
        throw std::invalid_argument("variance bound needs at least one shot");
    }
    const auto md = static_cast<double>(m);
    const double len = 2.0 * md + 1.0;
    return 16.0 * md / (len * len * static_cast<double>(shots_per_grid));
}

double direct_error_closed_form(unsigned num_qubits,
                                const ReadoutErrorModel &model,
                                const BasisIndex &index) {
    if (num_qubits == 0) {
        throw std::invalid_argument("qubit count must be positive");
    }
    if (index < 0 || index >= basis_dimension(num_qubits)) {
        throw std::out_of_range("basis index out of range");
    }
    unsigned ones = 0;
    for (BasisIndex rest = index; rest != 0; rest >>= 64) {
        ones += static_cast<unsigned>(std::popcount(
            static_cast<std::uint64_t>(rest & 0xFFFFFFFFFFFFFFFFULL)));
    }
    const unsigned zeros = num_qubits - ones;
    // log1p keeps 1 - (1 - e)^n accurate for small rates and large n.
    const double log_correct = static_cast<double>(zeros) * std::log1p(-model.e0()) +
                               static_cast<double>(ones) * std::log1p(-model.e1());
    return -std::expm1(log_correct);
}

double direct_error_binomial_sum(unsigned num_qubits, double xi) {
    const double keep = 1.0 - xi;
    double tail = 0.0;
    for (unsigned k = 1; k <= num_qubits; ++k) {
        tail += boost::math::binomial_coefficient<double>(num_qubits, k) *
                std::pow(keep, num_qubits - k) * std::pow(xi, k);
    }
    return 0.5 * (1.0 - std::pow(keep, num_qubits) + tail);
}

} // namespace compread
