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

#include "catch_amalgamated.hpp"
#include "oracle.hpp"
#include "qcompress/errors.hpp"
#include "qcompress/simulator.hpp"

using namespace qcompress;
using Catch::Approx;

TEST_CASE("run_circuit agrees with the dense matrix chain") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> nq(1, 4);
    std::uniform_int_distribution<int> ng(1, 20);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = nq(rng);
        const auto c = oracle::random_circuit(rng, n, ng(rng));
        const auto p = oracle::random_params(rng, c.num_params());
        const auto out = run_circuit(c, p, StateVector(n));
        const auto u = oracle::circuit_unitary(c, p);
        std::vector<Complex> e0(u.dim);
        e0[0] = 1.0;
        const auto expect = oracle::apply(u, e0);
        for (std::size_t i = 0; i < expect.size(); ++i) {
            REQUIRE(std::abs(out[i] - expect[i]) <= 1e-10);
        }
    }
}

TEST_CASE("apply_gate preserves the norm") {
    std::mt19937_64 rng(12);
    const auto c = oracle::random_circuit(rng, 3, 15);
    const auto p = oracle::random_params(rng, c.num_params());
    StateVector s(3);
    for (const auto &g : c.layers) {
        s = apply_gate(s, g, p);
        REQUIRE(s.norm_squared() == Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("measurement readouts") {
    StateVector s = StateVector::basis(2, 1); // qubit 0 = 1, qubit 1 = 0
    MeasurementSpec z;
    const auto out = measure_outputs(s, z);
    CHECK(out[0] == Approx(-1.0));
    CHECK(out[1] == Approx(1.0));

    MeasurementSpec groups;
    groups.n_classes = 3;
    groups.scheme = MeasurementScheme::StateGrouping;
    groups.groups = {{0}, {1, 2}, {3}};
    const double h = 1 / std::sqrt(2.0);
    const auto mixed = StateVector::from_amplitudes(2, {h, 0.0, h, 0.0});
    const auto g = measure_outputs(mixed, groups);
    CHECK(g[0] == Approx(0.5));
    CHECK(g[1] == Approx(0.5));
    CHECK(g[2] == Approx(0.0));

    MeasurementSpec too_many;
    too_many.n_classes = 3;
    CHECK_THROWS_AS(measure_outputs(s, too_many), SpecError);
}

TEST_CASE("gate placement errors") {
    StateVector s(2);
    const int bad[] = {2};
    const double a[] = {0.3};
    CHECK_THROWS_AS(s.apply(GateKind::RX, bad, a), QubitIndexError);
    const int same[] = {1, 1};
    CHECK_THROWS_AS(s.apply(GateKind::CRX, same, a), QubitIndexError);
    const int one[] = {0};
    CHECK_THROWS_AS(s.apply(GateKind::CX, one, {}), ArityError);
    CHECK_THROWS_AS(StateVector::from_amplitudes(2, {1.0}), SpecError);
}

TEST_CASE("softmax is shift invariant and normalized") {
    const double x[] = {1.0, 2.0, 3.0};
    const double y[] = {101.0, 102.0, 103.0};
    const auto a = softmax(x);
    const auto b = softmax(y);
    double total = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(a[i] == Approx(b[i]));
        total += a[i];
    }
    CHECK(total == Approx(1.0));
}
