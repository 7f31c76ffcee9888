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

#if QCOMPRESS_HAVE_AVX2_KERNELS

#include <immintrin.h>

// Functions carry target("avx2") instead of compiling the file with -mavx2 so
// that no AVX2 code leaks into inline functions shared with other TUs. FMA is
// deliberately not enabled: products and sums are rounded separately, exactly
// like the scalar reference.
#define QCOMPRESS_AVX2 __attribute__((target("avx2")))

namespace qcompress::simd::detail {

namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
QCOMPRESS_AVX2 inline __m256d load2(const Complex *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

QCOMPRESS_AVX2 inline void store2(Complex *p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

QCOMPRESS_AVX2 inline __m256d broadcast(const Complex &c) {
    return _mm256_setr_pd(c.real(), c.imag(), c.real(), c.imag());
}

QCOMPRESS_AVX2 inline __m256d pack(const Complex &lo, const Complex &hi) {
    return _mm256_setr_pd(lo.real(), lo.imag(), hi.real(), hi.imag());
}

// Lane-wise complex product c * v.
QCOMPRESS_AVX2 inline __m256d cmul(__m256d c, __m256d v) {
    const __m256d c_re = _mm256_movedup_pd(c);
    const __m256d c_im = _mm256_permute_pd(c, 0xF);
    const __m256d v_sw = _mm256_permute_pd(v, 0x5);
    return _mm256_addsub_pd(_mm256_mul_pd(c_re, v), _mm256_mul_pd(c_im, v_sw));
}

struct Coeffs {
    __m256d m0, m1, m2, m3;
};

QCOMPRESS_AVX2 inline Coeffs splat(const Mat2 &m) {
    return {broadcast(m[0]), broadcast(m[1]), broadcast(m[2]), broadcast(m[3])};
}

// Target >= 1: amps[j], amps[j+1] share every bit above bit 0, so the pair
// (j, j+stride) and (j+1, j+1+stride) are rotated together.
QCOMPRESS_AVX2 inline void rotate_wide(Complex *lo, Complex *hi, const Coeffs &c) {
    const __m256d v0 = load2(lo);
    const __m256d v1 = load2(hi);
    store2(lo, _mm256_add_pd(cmul(c.m0, v0), cmul(c.m1, v1)));
    store2(hi, _mm256_add_pd(cmul(c.m2, v0), cmul(c.m3, v1)));
}

// Target 0: the pair sits in one register as [a0, a1].
QCOMPRESS_AVX2 inline __m256d rotate_adjacent(__m256d v, __m256d diag, __m256d anti) {
    const __m256d swapped = _mm256_permute2f128_pd(v, v, 0x01);
    return _mm256_add_pd(cmul(diag, v), cmul(anti, swapped));
}

} // namespace

QCOMPRESS_AVX2 void apply_1q_avx2(Complex *amps, std::size_t n_qubits, unsigned target,
                                  const Mat2 &m) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (target == 0) {
        const __m256d diag = pack(m[0], m[3]);
        const __m256d anti = pack(m[1], m[2]);
        for (std::size_t j = 0; j < dim; j += 2) {
            store2(amps + j, rotate_adjacent(load2(amps + j), diag, anti));
        }
        return;
    }
    const Coeffs c = splat(m);
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t j = block; j < block + stride; j += 2) {
            rotate_wide(amps + j, amps + j + stride, c);
        }
    }
}

QCOMPRESS_AVX2 void apply_controlled_1q_avx2(Complex *amps, std::size_t n_qubits,
                                             unsigned control, unsigned target, const Mat2 &m) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t cmask = std::size_t{1} << control;
    if (target == 0) {
        const __m256d diag = pack(m[0], m[3]);
        const __m256d anti = pack(m[1], m[2]);
        for (std::size_t j = 0; j < dim; j += 2) {
            if (j & cmask) {
                store2(amps + j, rotate_adjacent(load2(amps + j), diag, anti));
            }
        }
        return;
    }
    const Coeffs c = splat(m);
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t j = block; j < block + stride; j += 2) {
            if (control == 0) {
                // Only the upper lane (index j+1) has the control bit set.
                const __m256d v0 = load2(amps + j);
                const __m256d v1 = load2(amps + j + stride);
                const __m256d n0 = _mm256_add_pd(cmul(c.m0, v0), cmul(c.m1, v1));
                const __m256d n1 = _mm256_add_pd(cmul(c.m2, v0), cmul(c.m3, v1));
                store2(amps + j, _mm256_blend_pd(v0, n0, 0xC));
                store2(amps + j + stride, _mm256_blend_pd(v1, n1, 0xC));
            } else if (j & cmask) {
                rotate_wide(amps + j, amps + j + stride, c);
            }
        }
    }
}

QCOMPRESS_AVX2 void probabilities_avx2(const Complex *amps, std::size_t dim, double *out) {
    std::size_t i = 0;
    for (; i + 4 <= dim; i += 4) {
        const __m256d a = load2(amps + i);
        const __m256d b = load2(amps + i + 2);
        // hadd yields [p0, p2, p1, p3].
        const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
        _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(h, 0xD8));
    }
    for (; i < dim; ++i) {
        out[i] = amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    }
}

QCOMPRESS_AVX2 double norm_squared_avx2(const Complex *amps, std::size_t dim) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= dim; i += 2) {
        const __m256d a = load2(amps + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(a, a));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < dim; ++i) {
        total += amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    }
    return total;
}

} // namespace qcompress::simd::detail

#endif // QCOMPRESS_HAVE_AVX2_KERNELS
