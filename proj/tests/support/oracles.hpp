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

//
// Reference implementations used as test oracles. Everything here is
// written straight from the defining formulas, in long double, with no
// calls into the library under test.
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Real = long double;

inline constexpr Real kPi = 3.141592653589793238462643383279502884L;

/// Uniformly random point on the probability simplex of size 2^n.
inline std::vector<double> random_simplex(unsigned n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::exponential_distribution<double> exp1(1.0);
    std::vector<double> w(std::size_t{1} << n);
    double total = 0.0;
    for (double &v : w) {
        v = exp1(gen);
        total += v;
    }
    for (double &v : w) {
        v /= total;
    }
    return w;
}

/// Random vector with entries uniform in [0, 1].
inline std::vector<double> random_unit_box(std::size_t size, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(size);
    for (double &x : v) {
        x = u(gen);
    }
    return v;
}

inline Real grid_angle(std::uint64_t k, std::uint64_t m) {
    return static_cast<Real>(k) * kPi / static_cast<Real>(2 * m + 1);
}

/// A(x) = sum_i w_i cos^2(i x).
inline Real ancilla(const std::vector<double> &w, Real x) {
    Real total = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Real c = std::cos(static_cast<Real>(i) * x);
        total += static_cast<Real>(w[i]) * c * c;
    }
    return total;
}

/// Inverse rule written out term by term.
inline std::vector<Real> decode(const std::vector<Real> &a) {
    const std::size_t m = a.size();
    const Real len = static_cast<Real>(2 * m + 1);
    std::vector<Real> p(m + 1);
    Real sum = 0;
    for (Real v : a) {
        sum += v;
    }
    p[0] = (1 - 2 * static_cast<Real>(m) + 4 * sum) / len;
    for (std::size_t i = 1; i <= m; ++i) {
        Real acc = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            acc += a[k - 1] * std::cos(2 * static_cast<Real>(i) * grid_angle(k, m));
        }
        p[i] = 4 * (1 + 2 * acc) / len;
    }
    return p;
}

inline std::vector<Real> decode(const std::vector<double> &a) {
    return decode(std::vector<Real>(a.begin(), a.end()));
}

/// Full noisy compression pipeline: ideal A at every grid point, global
/// depolarizing with f = (1 - gamma)^G, readout flips, decode.
inline std::vector<Real> compression_pipeline(const std::vector<double> &w, Real e0,
                                              Real e1, Real gamma, std::uint64_t gates) {
    const std::size_t m = w.size() - 1;
    Real f = 1;
    for (std::uint64_t g = 0; g < gates; ++g) {
        f *= 1 - gamma;
    }
    std::vector<Real> a(m);
    for (std::size_t k = 1; k <= m; ++k) {
        const Real ideal = ancilla(w, grid_angle(k, m));
        const Real dep = f * ideal + (1 - f) / 2;
        a[k - 1] = (1 - e0) * dep + e1 * (1 - dep);
    }
    return decode(a);
}

template <typename A, typename B>
Real tv(const std::vector<A> &p, const std::vector<B> &q) {
    Real total = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        total += std::fabs(static_cast<Real>(p[i]) - static_cast<Real>(q[i]));
    }
    return total / 2;
}

/// Q^{(x)n} as an explicit 2^n x 2^n matrix; qubit j is bit j of the index.
/// Q = [[1 - e0, e1], [e0, 1 - e1]] maps true bit (column) to read bit (row).
inline std::vector<std::vector<Real>> readout_matrix(unsigned n, Real e0, Real e1) {
    const Real q[2][2] = {{1 - e0, e1}, {e0, 1 - e1}};
    const std::size_t dim = std::size_t{1} << n;
    std::vector<std::vector<Real>> mat(dim, std::vector<Real>(dim, 1));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            for (unsigned j = 0; j < n; ++j) {
                mat[r][c] *= q[(r >> j) & 1U][(c >> j) & 1U];
            }
        }
    }
    return mat;
}

inline std::vector<Real> apply(const std::vector<std::vector<Real>> &mat,
                               const std::vector<double> &v) {
    std::vector<Real> out(mat.size(), 0);
    for (std::size_t r = 0; r < mat.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) {
            out[r] += mat[r][c] * static_cast<Real>(v[c]);
        }
    }
    return out;
}

/// Sample variance with the n - 1 denominator.
inline double sample_variance(const std::vector<double> &x) {
    double mean = 0.0;
    for (double v : x) {
        mean += v;
    }
    mean /= static_cast<double>(x.size());
    double ss = 0.0;
    for (double v : x) {
        ss += (v - mean) * (v - mean);
    }
    return ss / static_cast<double>(x.size() - 1);
}

} // namespace oracle
