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
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_internal.hpp"

namespace qcompress::simd {

namespace {

const KernelTable kScalar{Backend::Scalar, detail::apply_1q_scalar,
                          detail::apply_controlled_1q_scalar, detail::probabilities_scalar,
                          detail::norm_squared_scalar};

#if QCOMPRESS_HAVE_AVX2_KERNELS
const KernelTable kAvx2{Backend::Avx2, detail::apply_1q_avx2, detail::apply_controlled_1q_avx2,
                        detail::probabilities_avx2, detail::norm_squared_avx2};

bool cpu_has_avx2() noexcept {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
}
#endif

const KernelTable *detect() noexcept {
    const KernelTable *best = &kScalar;
    if (const KernelTable *t = avx2_kernels()) {
        best = t;
    }
    if (const char *env = std::getenv("QCOMPRESS_SIMD")) {
        const std::string want(env);
        if (want == "scalar") {
            return &kScalar;
        }
        if (want == "avx2" && avx2_kernels() != nullptr) {
            return avx2_kernels();
        }
    }
    return best;
}

std::atomic<const KernelTable *> &active_slot() noexcept {
    static std::atomic<const KernelTable *> slot{detect()};
    return slot;
}

} // namespace

const KernelTable &scalar_kernels() noexcept { return kScalar; }

const KernelTable *avx2_kernels() noexcept {
#if QCOMPRESS_HAVE_AVX2_KERNELS
    static const bool ok = cpu_has_avx2();
    return ok ? &kAvx2 : nullptr;
#else
    return nullptr;
#endif
}

bool backend_available(Backend b) noexcept {
    return b == Backend::Scalar || avx2_kernels() != nullptr;
}

const KernelTable &kernels(Backend b) {
    if (b == Backend::Scalar) {
        return kScalar;
    }
    if (const KernelTable *t = avx2_kernels()) {
        return *t;
    }
    throw std::invalid_argument("AVX2 kernels are not available on this CPU/build");
}

const KernelTable &active_kernels() noexcept { return *active_slot().load(std::memory_order_acquire); }

Backend active_backend() noexcept { return active_kernels().backend; }

void set_active_backend(Backend b) {
    active_slot().store(&kernels(b), std::memory_order_release);
}

std::string_view backend_name(Backend b) noexcept {
    return b == Backend::Scalar ? "scalar" : "avx2";
}

} // namespace qcompress::simd
