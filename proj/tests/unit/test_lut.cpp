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
#include <algorithm>
#include <cmath>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "qcompress/angles.hpp"
#include "qcompress/circuit_io.hpp"
#include "qcompress/errors.hpp"
#include "qcompress/lut.hpp"

using namespace qcompress;
using Catch::Approx;

namespace {

std::vector<double> values(const std::vector<CompressionLevel> &levels) {
    std::vector<double> out;
    for (const auto &l : levels) {
        out.push_back(l.value[0]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> multiples(std::initializer_list<double> k) {
    std::vector<double> out;
    for (double x : k) {
        out.push_back(x * kPi);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void check_values(const std::vector<double> &got, const std::vector<double> &want) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i] == Approx(want[i]).margin(1e-12));
    }
}

} // namespace

TEST_CASE("pruning levels") {
    for (GateKind k : {GateKind::RX, GateKind::RY, GateKind::RZ}) {
        const auto c = default_candidates(k);
        check_values(values(find_pruning_levels(k, c)), multiples({0, 2}));
    }
    for (GateKind k : {GateKind::CRX, GateKind::CRY, GateKind::CRZ}) {
        const auto c = default_candidates(k);
        check_values(values(find_pruning_levels(k, c)), multiples({0}));
    }
    const auto c = default_candidates(GateKind::RX);
    for (const auto &l : find_pruning_levels(GateKind::RX, c)) {
        CHECK(l.tag == LevelTag::Prune);
        CHECK(l.depth == 0);
    }
}

TEST_CASE("quantization levels") {
    const BasisGateSet b;
    auto quant = [&](GateKind k) {
        const auto c = default_candidates(k);
        return find_quantization_levels(k, b, c);
    };
    check_values(values(quant(GateKind::RX)), multiples({0.5, 1, 1.5, 2.5, 3, 3.5}));
    check_values(values(quant(GateKind::RY)), multiples({0.5, 1, 1.5, 2.5, 3, 3.5}));
    check_values(values(quant(GateKind::CRX)), multiples({1, 2, 3}));
    check_values(values(quant(GateKind::CRY)), multiples({1, 2, 3}));
    CHECK(quant(GateKind::RZ).empty());
    CHECK(quant(GateKind::CRZ).empty());
    for (GateKind k : {GateKind::RX, GateKind::RY, GateKind::CRX, GateKind::CRY}) {
        for (const auto &l : quant(k)) {
            REQUIRE(l.depth < generic_depth(k, b));
            REQUIRE(l.tag == LevelTag::Quantize);
        }
    }
}

TEST_CASE("circuit LUT covers its trainable kinds, sorted") {
    const auto lut = build_lut(reference_circuit("syn4"), BasisGateSet{});
    CHECK(lut.entries().size() == 6);
    for (const auto &[kind, entry] : lut.entries()) {
        REQUIRE(std::is_sorted(entry.begin(), entry.end(), level_less));
    }
    CHECK_THROWS_AS(lut.entry(GateKind::U3), LutError);
    const auto prune = lut.filtered(LevelTag::Prune);
    for (const auto &[kind, entry] : prune.entries()) {
        for (const auto &l : entry) {
            REQUIRE(l.tag == LevelTag::Prune);
        }
    }
    CHECK(lut.filtered(LevelTag::Quantize).entry(GateKind::RZ).empty());
}

TEST_CASE("nearest level uses circular distance and breaks ties by depth") {
    const auto lut = build_lut(reference_circuit("syn4"), BasisGateSet{});
    const auto &rx = lut.entry(GateKind::RX);
    CHECK(nearest_level(rx, 0.1).value[0] == 0.0);
    CHECK(nearest_level(rx, kFourPi - 0.1).value[0] == 0.0);
    // Halfway between π/2 (depth 1) and π (depth 1): smaller value wins.
    CHECK(nearest_level(rx, 0.75 * kPi).value[0] == Approx(kPi / 2));
    // Halfway between π (depth 1) and 3π/2 (depth 3): shallower wins.
    CHECK(nearest_level(rx, 1.25 * kPi).value[0] == Approx(kPi));
    CHECK_THROWS_AS(nearest_level(std::vector<CompressionLevel>{}, 0.0), LutError);
}

TEST_CASE("LUT CSV layout") {
    CompressionLUT lut;
    lut.set_entry(GateKind::RX, {{{kPi}, LevelTag::Quantize, 1}, {{0.0}, LevelTag::Prune, 0}});
    std::ostringstream ss;
    lut.write_csv(ss);
    CHECK(ss.str() == "gate,value,tag,depth\nRX,0,prune,0\nRX,3.1415926535897931,quantize,1\n");
}
