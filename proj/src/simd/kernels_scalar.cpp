// Copyright 2026 The qcompress Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "kernels_internal.hpp"

namespace qcompress::simd::detail {

namespace {

// Spelled out on components so the operation order matches the vector
// variants term for term.
inline Complex mul(Complex a, Complex b) {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

inline Complex add(Complex a, Complex b) { return {a.real() + b.real(), a.imag() + b.imag()}; }

inline void rotate_pair(Complex &a0, Complex &a1, const Mat2 &m) {
    const Complex v0 = a0;
    const Complex v1 = a1;
    a0 = add(mul(m[0], v0), mul(m[1], v1));
    a1 = add(mul(m[2], v0), mul(m[3], v1));
}

} // namespace

void apply_1q_scalar(Complex *amps, std::size_t n_qubits, unsigned target, const Mat2 &m) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t j = block; j < block + stride; ++j) {
            rotate_pair(amps[j], amps[j + stride], m);
        }
    }
}

void apply_controlled_1q_scalar(Complex *amps, std::size_t n_qubits, unsigned control,
                                unsigned target, const Mat2 &m) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t j = block; j < block + stride; ++j) {
            if (j & cmask) {
                rotate_pair(amps[j], amps[j + stride], m);
            }
        }
    }
}

void probabilities_scalar(const Complex *amps, std::size_t dim, double *out) {
    for (std::size_t i = 0; i < dim; ++i) {
        out[i] = amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    }
}

double norm_squared_scalar(const Complex *amps, std::size_t dim) {
    double acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        acc += amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    }
    return acc;
}

} // namespace qcompress::simd::detail
