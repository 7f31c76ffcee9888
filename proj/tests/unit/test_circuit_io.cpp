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
#include <fstream>
#include <random>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "oracle.hpp"
#include "qcompress/angles.hpp"
#include "qcompress/circuit_io.hpp"
#include "qcompress/errors.hpp"

using namespace qcompress;
using Catch::Approx;

namespace {

std::string slurp(const std::string &rel) {
    std::ifstream in(std::string(QCOMPRESS_SOURCE_DIR) + "/" + rel);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t parse_error_line(std::string_view text) {
    try {
        parse_circuit(text);
    } catch (const ParseError &e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("reference circuits match the shipped files") {
    CHECK(reference_circuit("syn4") == parse_circuit(slurp("circuits/syn4.circ")));
    CHECK(reference_circuit("syn16") == parse_circuit(slurp("circuits/syn16.circ")));
    CHECK_THROWS_AS(reference_circuit("syn8"), ConfigError);
}

TEST_CASE("reference circuit shapes") {
    const auto a = reference_circuit("syn4");
    CHECK(a.n_qubits == 2);
    CHECK(a.trainable_gates().size() == 14);
    CHECK(a.encoder.size() == 4);
    const auto b = reference_circuit("syn16");
    CHECK(b.n_qubits == 4);
    CHECK(b.trainable_gates().size() == 22);
    CHECK(b.encoder.size() == 16);
}

TEST_CASE("angle literals") {
    CHECK(parse_angle("pi") == Approx(kPi));
    CHECK(parse_angle("-pi/2") == Approx(-kPi / 2));
    CHECK(parse_angle("3pi/2") == Approx(1.5 * kPi));
    CHECK(parse_angle("2*pi") == Approx(kTwoPi));
    CHECK(parse_angle("0.25") == Approx(0.25));
    CHECK_THROWS(parse_angle("pie"));
}

TEST_CASE("format and parse round trip") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const auto c = oracle::random_circuit(rng, 1 + trial % 4, 1 + trial % 20);
        REQUIRE(parse_circuit(format_circuit(c)) == c);
    }
    const auto ref = reference_circuit("syn16");
    CHECK(parse_circuit(format_circuit(ref)) == ref);
}

TEST_CASE("constants and grouping measurement parse") {
    const auto c = parse_circuit("qubits 2\n#layers\nRX 0 pi/2\nCU3 0,1 free3\nCX 1,0\n"
                                 "#measure grouping 3 0 1-2 3\n");
    CHECK(c.num_params() == 3);
    CHECK(c.layers[0].params[0].source == ParamRef::Source::Constant);
    CHECK(c.layers[0].params[0].value == Approx(kPi / 2));
    CHECK(c.measurement.scheme == MeasurementScheme::StateGrouping);
    REQUIRE(c.measurement.groups.size() == 3);
    CHECK(c.measurement.groups[1] == std::vector<std::size_t>{1, 2});
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error_line("RX 0 free\n") == 1);
    CHECK(parse_error_line("qubits 2\n#layers\nFOO 0 free\n") == 3);
    CHECK(parse_error_line("qubits 2\n#layers\n\nRX 2 free\n") == 4);
    CHECK(parse_error_line("qubits 2\n#layers\nCRX 1,1 free\n") == 3);
    CHECK(parse_error_line("qubits 2\n#encoder\nRX 0 free\n") == 3);
    CHECK(parse_error_line("qubits 2\n#layers\nRX 0 x0\n") == 3);
    CHECK(parse_error_line("qubits 2\n#layers\nCX 0,1 free\n") == 3);
    CHECK(parse_error_line("qubits 2\n#bogus\n") == 2);
    CHECK(parse_error_line("qubits 2\n#layers\nRX 0 free\n#measure perqubitz 3\n") == 4);
}

TEST_CASE("missing file is an IoError") {
    CHECK_THROWS_AS(load_circuit("/nonexistent/file.circ"), IoError);
}
