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

// State-vector inner loops. Every kernel has a portable scalar reference
// and, on x86-64, an AVX2 variant; the active table is picked once at
// startup from CPUID and can be forced with QCOMPRESS_SIMD=scalar|avx2 or
// set_active_backend(). Variants must agree with the scalar reference to
// rounding (see tests/unit/test_simd_kernels.cpp).
//
// Amplitude layout: interleaved std::complex<double>, qubit 0 is the least
// significant bit of the basis index.

#include <cstddef>
#include <string_view>

#include "qcompress/linalg.hpp"

namespace qcompress::simd {

enum class Backend { Scalar, Avx2 };

struct KernelTable {
    Backend backend;

    /// amps <- (I ⊗ .. ⊗ m ⊗ .. ⊗ I) amps, m acting on `target`.
    void (*apply_1q)(Complex *amps, std::size_t n_qubits, unsigned target, const Mat2 &m);

    /// Applies m to `target` on the subspace where `control` is 1.
    void (*apply_controlled_1q)(Complex *amps, std::size_t n_qubits, unsigned control,
                                unsigned target, const Mat2 &m);

    /// out[i] = |amps[i]|^2 for i < dim.
    void (*probabilities)(const Complex *amps, std::size_t dim, double *out);

    /// Sum of |amps[i]|^2.
    double (*norm_squared)(const Complex *amps, std::size_t dim);
};

const KernelTable &scalar_kernels() noexcept;

/// Nullptr when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable *avx2_kernels() noexcept;

bool backend_available(Backend b) noexcept;
const KernelTable &kernels(Backend b);

/// The table used by the simulator.
const KernelTable &active_kernels() noexcept;
Backend active_backend() noexcept;

/// Throws std::invalid_argument if the backend is unavailable.
void set_active_backend(Backend b);

std::string_view backend_name(Backend b) noexcept;

} // namespace qcompress::simd
