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
 * Arbitrary-length discrete Fourier transforms.
 *
 * The grid transforms used by the encoder and decoder have odd length
 * 2m + 1 = 2^(n+1) - 1, so a plain radix-2 FFT does not apply. Lengths that
 * are not powers of two go through Bluestein's chirp-z reformulation as a
 * power-of-two circular convolution.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace compread::fourier {

/// In-place radix-2 transform. data.size() must be a power of two.
/// Forward sign is exp(-2 pi i f t / M); the inverse is unnormalized.
void fft_pow2(std::span<std::complex<double>> data, bool inverse = false);

/// Y_f = sum_t y_t exp(-2 pi i f t / L) for f = 0..L-1, L = input.size().
std::vector<std::complex<double>>
dft(std::span<const std::complex<double>> input);

/// C_f = sum_t y_t cos(2 pi f t / length) for f = 0..length-1, with y
/// zero-padded to `length`. Requires input.size() <= length.
std::vector<double> cosine_sums(std::span<const double> input,
                                std::size_t length);

} // namespace compread::fourier
