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
#pragma once

#include "qcompress/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define QCOMPRESS_HAVE_AVX2_KERNELS 1
#else
#define QCOMPRESS_HAVE_AVX2_KERNELS 0
#endif

namespace qcompress::simd::detail {

void apply_1q_scalar(Complex *amps, std::size_t n_qubits, unsigned target, const Mat2 &m);
void apply_controlled_1q_scalar(Complex *amps, std::size_t n_qubits, unsigned control,
                                unsigned target, const Mat2 &m);
void probabilities_scalar(const Complex *amps, std::size_t dim, double *out);
double norm_squared_scalar(const Complex *amps, std::size_t dim);

#if QCOMPRESS_HAVE_AVX2_KERNELS
void apply_1q_avx2(Complex *amps, std::size_t n_qubits, unsigned target, const Mat2 &m);
void apply_controlled_1q_avx2(Complex *amps, std::size_t n_qubits, unsigned control,
                              unsigned target, const Mat2 &m);
void probabilities_avx2(const Complex *amps, std::size_t dim, double *out);
double norm_squared_avx2(const Complex *amps, std::size_t dim);
#endif

} // namespace qcompress::simd::detail
