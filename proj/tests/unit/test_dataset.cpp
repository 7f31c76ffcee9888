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
#include <numeric>

#include "catch_amalgamated.hpp"
#include "qcompress/circuit_io.hpp"
#include "qcompress/dataset.hpp"
#include "qcompress/errors.hpp"

using namespace qcompress;
using Catch::Approx;

TEST_CASE("synthetic data: sizes, balance, range") {
    for (int nf : {4, 16}) {
        const auto d = generate_synthetic(nf, 100, 3);
        CHECK(d.train.size() == 90);
        CHECK(d.test.size() == 10);
        int ones = 0;
        for (const auto *part : {&d.train, &d.test}) {
            for (const auto &s : *part) {
                REQUIRE(s.features.size() == static_cast<std::size_t>(nf));
                for (double f : s.features) {
                    REQUIRE(f >= 0.0);
                    REQUIRE(f <= 1.0);
                }
                ones += s.label;
            }
        }
        CHECK(ones == 50);
    }
    CHECK_THROWS_AS(generate_synthetic(8, 100, 0), ConfigError);
}

TEST_CASE("synthetic classes are mirrored") {
    const auto d = generate_synthetic(4, 400, 5);
    double first0 = 0, first1 = 0;
    int n0 = 0, n1 = 0;
    for (const auto &s : d.train) {
        const double m = (s.features[0] + s.features[1]) / 2;
        (s.label == 0 ? first0 : first1) += m;
        (s.label == 0 ? n0 : n1) += 1;
    }
    CHECK(first0 / n0 == Approx(0.25).margin(0.03));
    CHECK(first1 / n1 == Approx(0.75).margin(0.03));
}

TEST_CASE("splits are deterministic per seed") {
    const auto a = generate_synthetic(4, 100, 7);
    const auto b = generate_synthetic(4, 100, 7);
    const auto c = generate_synthetic(4, 100, 8);
    CHECK(a.train == b.train);
    CHECK(a.test == b.test);
    CHECK_FALSE(a.train == c.train);
}

TEST_CASE("CSV parsing and errors") {
    const auto d = parse_csv("0,0.1,0.2\n1,0.3,0.4\n\n1,0.5,0.6\n0,0.7,0.8\n", 2, 0);
    CHECK(d.train.size() + d.test.size() == 4);
    auto line_of = [](std::string_view text) -> std::size_t {
        try {
            parse_csv(text, 2, 0);
        } catch (const ParseError &e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("0,0.1\n1,abc\n") == 2);
    CHECK(line_of("0,0.1\n2,0.3\n") == 2);
    CHECK(line_of("0,0.1,0.2\n1,0.3\n") == 2);
    CHECK(line_of("0.5,0.1\n") == 1);
    CHECK_THROWS_AS(parse_csv("", 2, 0), DataError);
    CHECK_THROWS_AS(load_csv("/nonexistent.csv", 2, 0), IoError);
}

TEST_CASE("28x28 pooling averages 7x7 blocks") {
    std::vector<double> img(784);
    for (std::size_t r = 0; r < 28; ++r) {
        for (std::size_t c = 0; c < 28; ++c) {
            img[r * 28 + c] = static_cast<double>((r / 7) * 4 + c / 7);
        }
    }
    const auto pooled = average_pool_28x28(img);
    REQUIRE(pooled.size() == 16);
    for (std::size_t i = 0; i < 16; ++i) {
        CHECK(pooled[i] == Approx(static_cast<double>(i)));
    }
}

TEST_CASE("encoders") {
    const auto e4 = EncoderSpec::angle(4, 2);
    REQUIRE(e4.gate_plan.size() == 4);
    CHECK(e4.gate_plan[0].first == GateKind::RY);
    CHECK(e4.gate_plan[2].first == GateKind::RZ);
    CHECK(e4.gate_plan[3].second == 1);
    const auto e16 = EncoderSpec::angle(16, 4);
    CHECK(e16.gate_plan[8].first == GateKind::RX);
    CHECK(e16.gates().size() == 16);
    CHECK(feature_count(reference_circuit("syn16")) == 16);

    const double f[] = {3.0, 4.0};
    const auto s = amplitude_state(f, 1);
    CHECK(std::abs(s[0]) == Approx(0.6));
    CHECK(std::abs(s[1]) == Approx(0.8));
    const double zero[] = {0.0, 0.0};
    CHECK_THROWS_AS(amplitude_state(zero, 1), EncodeError);
    CHECK_THROWS_AS(amplitude_state(f, 2), EncodeError);
}
