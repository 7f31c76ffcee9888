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
#include <limits>
#include <random>

#include "catch_amalgamated.hpp"
#include "qcompress/angles.hpp"
#include "qcompress/errors.hpp"

using namespace qcompress;
using Catch::Approx;

TEST_CASE("wrap_param maps onto [0, 4pi)") {
    CHECK(wrap_param(0.0) == 0.0);
    CHECK(wrap_param(kFourPi) == 0.0);
    CHECK(wrap_param(-kPi) == Approx(3 * kPi));
    CHECK(wrap_param(5 * kPi) == Approx(kPi));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-100.0, 100.0);
    for (int i = 0; i < 2000; ++i) {
        const double x = u(rng);
        const double w = wrap_param(x);
        REQUIRE(w >= 0.0);
        REQUIRE(w < kFourPi);
        const double k = (x - w) / kFourPi;
        REQUIRE(std::abs(k - std::round(k)) < 1e-9);
    }
}

TEST_CASE("wrap_param rejects non-finite input") {
    CHECK_THROWS_AS(wrap_param(std::numeric_limits<double>::quiet_NaN()), ValueError);
    CHECK_THROWS_AS(wrap_param(std::numeric_limits<double>::infinity()), ValueError);
}

TEST_CASE("circular residual lies in (-2pi, 2pi] and is antisymmetric off the seam") {
    CHECK(circular_residual(0.1, kFourPi - 0.1) == Approx(0.2));
    CHECK(circular_residual(kFourPi - 0.1, 0.1) == Approx(-0.2));
    CHECK(circular_distance(0.0, kTwoPi) == Approx(kTwoPi));
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, kFourPi);
    for (int i = 0; i < 2000; ++i) {
        const double a = u(rng), b = u(rng);
        const double r = circular_residual(a, b);
        REQUIRE(r > -kTwoPi);
        REQUIRE(r <= kTwoPi);
        REQUIRE(wrap_param(b + r) == Approx(wrap_param(a)).margin(1e-9));
    }
}

TEST_CASE("vector circular distance is the Euclidean norm of residuals") {
    const double a[] = {0.1, 3.0};
    const double b[] = {kFourPi - 0.2, 3.4};
    CHECK(circular_distance(a, b) == Approx(0.5));
}

TEST_CASE("congruent honours the period") {
    CHECK(congruent(kTwoPi + 1e-12, 0.0, kTwoPi));
    CHECK_FALSE(congruent(kTwoPi, 0.0, kFourPi));
    CHECK(congruent(-1e-12, 0.0, kFourPi));
}
