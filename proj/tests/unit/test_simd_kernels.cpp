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
#include <cmath>
#include <random>
#include <vector>

#include "catch_amalgamated.hpp"
#include "oracle.hpp"
#include "qcompress/simd/kernels.hpp"
#include "qcompress/simulator.hpp"

using namespace qcompress;

namespace {

std::vector<Complex> random_state(std::mt19937_64 &rng, std::size_t dim) {
    std::normal_distribution<double> g;
    std::vector<Complex> v(dim);
    for (auto &x : v) {
        x = {g(rng), g(rng)};
    }
    return v;
}

Mat2 random_mat(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Mat2 m;
    for (auto &x : m) {
        x = {g(rng), g(rng)};
    }
    return m;
}

double max_diff(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    double w = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        w = std::max(w, std::abs(a[i] - b[i]));
    }
    return w;
}

} // namespace

TEST_CASE("scalar kernels match the dense oracle") {
    std::mt19937_64 rng(21);
    const auto &k = simd::scalar_kernels();
    for (int n = 1; n <= 6; ++n) {
        for (int t = 0; t < n; ++t) {
            const double p[] = {0.4, 1.1, -2.0};
            auto v = random_state(rng, std::size_t{1} << n);
            const auto expect = oracle::apply(oracle::embed(GateKind::U3, std::vector<int>{t}, p, n), v);
            const Mat2 m = target_matrix(GateKind::U3, p);
            k.apply_1q(v.data(), static_cast<std::size_t>(n), static_cast<unsigned>(t), m);
            REQUIRE(max_diff(v, expect) < 1e-12);
        }
    }
}

TEST_CASE("AVX2 kernels match the scalar reference") {
    if (!simd::backend_available(simd::Backend::Avx2)) {
        SKIP("AVX2 unavailable on this machine");
    }
    const auto &s = simd::scalar_kernels();
    const auto &a = *simd::avx2_kernels();
    std::mt19937_64 rng(22);
    for (int n = 1; n <= 8; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        for (int t = 0; t < n; ++t) {
            const Mat2 m = random_mat(rng);
            auto v1 = random_state(rng, dim);
            auto v2 = v1;
            s.apply_1q(v1.data(), n, t, m);
            a.apply_1q(v2.data(), n, t, m);
            REQUIRE(max_diff(v1, v2) < 1e-13);
            for (int c = 0; c < n; ++c) {
                if (c == t) {
                    continue;
                }
                auto w1 = random_state(rng, dim);
                auto w2 = w1;
                s.apply_controlled_1q(w1.data(), n, c, t, m);
                a.apply_controlled_1q(w2.data(), n, c, t, m);
                REQUIRE(max_diff(w1, w2) < 1e-13);
            }
        }
        const auto v = random_state(rng, dim);
        std::vector<double> p1(dim), p2(dim);
        s.probabilities(v.data(), dim, p1.data());
        a.probabilities(v.data(), dim, p2.data());
        for (std::size_t i = 0; i < dim; ++i) {
            REQUIRE(std::abs(p1[i] - p2[i]) < 1e-13);
        }
        REQUIRE(std::abs(s.norm_squared(v.data(), dim) - a.norm_squared(v.data(), dim)) <
                1e-11);
    }
}

TEST_CASE("backend switch leaves simulation results unchanged") {
    std::mt19937_64 rng(23);
    const auto c = oracle::random_circuit(rng, 4, 20);
    const auto p = oracle::random_params(rng, c.num_params());
    const auto before = simd::active_backend();
    simd::set_active_backend(simd::Backend::Scalar);
    const auto a = run_circuit(c, p, StateVector(4));
    if (simd::backend_available(simd::Backend::Avx2)) {
        simd::set_active_backend(simd::Backend::Avx2);
    }
    const auto b = run_circuit(c, p, StateVector(4));
    simd::set_active_backend(before);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        REQUIRE(std::abs(a[i] - b[i]) < 1e-13);
    }
    CHECK(simd::backend_name(simd::Backend::Scalar) == "scalar");
}
