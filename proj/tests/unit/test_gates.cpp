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
#include "qcompress/angles.hpp"
#include "qcompress/errors.hpp"
#include "qcompress/gates.hpp"

using namespace qcompress;

namespace {

double diff(const DenseMatrix &m, const oracle::CMat &o) {
    double worst = 0.0;
    for (std::size_t r = 0; r < o.dim; ++r) {
        for (std::size_t c = 0; c < o.dim; ++c) {
            worst = std::max(worst, std::abs(m(r, c) - o.at(r, c)));
        }
    }
    return worst;
}

// Local control-high ordering: diag(I, U).
oracle::CMat controlled_local(const oracle::CMat &u) {
    oracle::CMat m = oracle::CMat::eye(4);
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            m.at(2 + r, 2 + c) = u.at(r, c);
        }
    }
    return m;
}

} // namespace

TEST_CASE("gate matrices match closed forms") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (GateKind k : kAllGateKinds) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<double> p(static_cast<std::size_t>(arity(k)));
            for (auto &x : p) {
                x = u(rng);
            }
            const auto m = gate_matrix(k, p);
            const auto local = oracle::local_2x2(k, p);
            const auto expect = qubit_count(k) == 2 ? controlled_local(local) : local;
            INFO(gate_name(k));
            REQUIRE(diff(m, expect) < 1e-12);
            REQUIRE(m.is_unitary(1e-12));
        }
    }
}

TEST_CASE("rotations are 4pi periodic and negate at 2pi") {
    for (GateKind k : {GateKind::RX, GateKind::RY, GateKind::RZ}) {
        const double a[] = {0.7};
        const double b[] = {0.7 + kFourPi};
        const double c[] = {0.7 + kTwoPi};
        const auto ma = gate_matrix(k, a);
        CHECK(ma.max_abs_diff(gate_matrix(k, b)) < 1e-12);
        CHECK(ma.max_abs_diff(gate_matrix(k, c) * Complex(-1.0)) < 1e-12);
    }
}

TEST_CASE("known matrices") {
    const double pi[] = {kPi};
    const auto rx = gate_matrix(GateKind::RX, pi);
    CHECK(std::abs(rx(0, 1) - Complex(0, -1)) < 1e-15);
    const double u3[] = {kPi / 2, 0.0, kPi};
    const auto h = gate_matrix(GateKind::U3, u3);
    const double s = 1 / std::sqrt(2.0);
    CHECK(std::abs(h(0, 0) - s) < 1e-15);
    CHECK(std::abs(h(1, 1) + s) < 1e-15);
    const auto cx = gate_matrix(GateKind::CX, {});
    CHECK(cx(2, 3) == Complex(1.0));
    CHECK(cx(0, 0) == Complex(1.0));
}

TEST_CASE("arity and names") {
    CHECK(arity(GateKind::U3) == 3);
    CHECK(arity(GateKind::CX) == 0);
    CHECK(qubit_count(GateKind::CRZ) == 2);
    CHECK(target_kind(GateKind::CU3) == GateKind::U3);
    const double one[] = {1.0};
    CHECK_THROWS_AS(gate_matrix(GateKind::U3, one), ArityError);
    CHECK_THROWS_AS(gate_matrix(GateKind::SX, one), ArityError);
    for (GateKind k : kAllGateKinds) {
        REQUIRE(parse_gate_kind(gate_name(k)) == k);
    }
    CHECK_FALSE(parse_gate_kind("FOO").has_value());
}
