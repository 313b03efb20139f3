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

#include "compread/fourier.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace compread::fourier {

namespace {

using cplx = std::complex<double>;

// Below this length the quadratic sum is cheaper than the chirp machinery.
constexpr std::size_t kDirectCutoff = 32;

std::vector<cplx> direct_dft(std::span<const cplx> input) {
    const std::size_t len = input.size();
    std::vector<cplx> table(len);
    for (std::size_t t = 0; t < len; ++t) {
        table[t] = std::polar(1.0, -2.0 * std::numbers::pi *
                                       static_cast<double>(t) /
                                       static_cast<double>(len));
    }
    std::vector<cplx> out(len);
    for (std::size_t f = 0; f < len; ++f) {
        cplx acc{0.0, 0.0};
        for (std::size_t t = 0; t < len; ++t) {
            acc += input[t] * table[(f * t) % len];
        }
        out[f] = acc;
    }
    return out;
}

std::vector<cplx> bluestein(std::span<const cplx> input) {
    const std::size_t len = input.size();
    const std::size_t conv = std::bit_ceil(2 * len - 1);
    const auto two_len = static_cast<std::uint64_t>(2 * len);

    // chirp[t] = exp(-i pi t^2 / L); t^2 is reduced mod 2L before the
    // trigonometric call so large t keeps full precision.
    std::vector<cplx> chirp(len);
    for (std::size_t t = 0; t < len; ++t) {
        const std::uint64_t sq =
            (static_cast<std::uint64_t>(t) * t) % two_len;
        chirp[t] = std::polar(1.0, -std::numbers::pi * static_cast<double>(sq) /
                                       static_cast<double>(len));
    }

    std::vector<cplx> a(conv, cplx{0.0, 0.0});
    for (std::size_t t = 0; t < len; ++t) {
        a[t] = input[t] * chirp[t];
    }
    std::vector<cplx> b(conv, cplx{0.0, 0.0});
    b[0] = std::conj(chirp[0]);
    for (std::size_t s = 1; s < len; ++s) {
        b[s] = std::conj(chirp[s]);
        b[conv - s] = std::conj(chirp[s]);
    }

    fft_pow2(a);
    fft_pow2(b);
    for (std::size_t k = 0; k < conv; ++k) {
        a[k] *= b[k];
    }
    fft_pow2(a, true);

    const double scale = 1.0 / static_cast<double>(conv);
    std::vector<cplx> out(len);
    for (std::size_t f = 0; f < len; ++f) {
        out[f] = a[f] * scale * chirp[f];
    }
    return out;
}

} // namespace

void fft_pow2(std::span<cplx> data, bool inverse) {
    const std::size_t size = data.size();
    if (size <= 1) {
        return;
    }
    if (!std::has_single_bit(size)) {
        throw std::invalid_argument("fft_pow2: length is not a power of two");
    }

    for (std::size_t i = 1, j = 0; i < size; ++i) {
        std::size_t bit = size >> 1U;
        for (; (j & bit) != 0; bit >>= 1U) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(data[i], data[j]);
        }
    }

    const double sign = inverse ? 1.0 : -1.0;
    std::vector<cplx> twiddle(size / 2);
    for (std::size_t k = 0; k < size / 2; ++k) {
        twiddle[k] = std::polar(1.0, sign * 2.0 * std::numbers::pi *
                                         static_cast<double>(k) /
                                         static_cast<double>(size));
    }

    for (std::size_t half = 1; half < size; half <<= 1U) {
        const std::size_t stride = size / (2 * half);
        for (std::size_t start = 0; start < size; start += 2 * half) {
            for (std::size_t k = 0; k < half; ++k) {
                const cplx u = data[start + k];
                const cplx v = data[start + k + half] * twiddle[k * stride];
                data[start + k] = u + v;
                data[start + k + half] = u - v;
            }
        }
    }
}

std::vector<cplx> dft(std::span<const cplx> input) {
    const std::size_t len = input.size();
    if (len == 0) {
        return {};
    }
    if (std::has_single_bit(len)) {
        std::vector<cplx> out(input.begin(), input.end());
        fft_pow2(out);
        return out;
    }
    if (len <= kDirectCutoff) {
        return direct_dft(input);
    }
    return bluestein(input);
}

std::vector<double> cosine_sums(std::span<const double> input,
                                std::size_t length) {
    if (input.size() > length) {
        throw std::invalid_argument("cosine_sums: input longer than length");
    }
    std::vector<cplx> padded(length, cplx{0.0, 0.0});
    for (std::size_t t = 0; t < input.size(); ++t) {
        padded[t] = cplx{input[t], 0.0};
    }
    const std::vector<cplx> spectrum = dft(padded);
    std::vector<double> out(length);
    for (std::size_t f = 0; f < length; ++f) {
        out[f] = spectrum[f].real();
    }
    return out;
}

} // namespace compread::fourier
