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
#include <filesystem>
#include <fstream>

#include "catch_amalgamated.hpp"
#include "qcompress/config.hpp"
#include "qcompress/errors.hpp"

using namespace qcompress;

TEST_CASE("key = value parsing") {
    const auto kv = parse_key_values("# comment\n\nrho = 2.5\n  ratio=0.7  \nmethods = vanilla\n");
    REQUIRE(kv.size() == 3);
    CHECK(kv[0] == std::pair<std::string, std::string>{"rho", "2.5"});
    CHECK(kv[1].second == "0.7");
    try {
        parse_key_values("rho = 1\njunk\n");
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("settings apply and validate") {
    const auto c = config_from_text("rho = 2.5\nratio = 0.7\nseed = 9\nmethods = compvqc,vanilla\n"
                                    "basis = CX,RZ,SX\nnoise_p = 0.01\ntau = ratio\n");
    CHECK(c.admm.rho == 2.5);
    CHECK(c.admm.target_ratio == 0.7);
    CHECK(c.seed == 9);
    CHECK(c.train.seed == 9);
    CHECK(c.methods == std::vector<Method>{Method::Vanilla, Method::CompVQC});
    CHECK(c.basis == BasisGateSet{GateKind::CX, GateKind::RZ, GateKind::SX});
    CHECK(c.noise_p == 0.01);
    CHECK(c.admm.orientation == TauOrientation::Ratio);
    CHECK_NOTHROW(c.validate());

    ExperimentConfig e;
    CHECK_THROWS_AS(apply_setting(e, "nope", "1"), ConfigError);
    CHECK_THROWS_AS(apply_setting(e, "rho", "abc"), ConfigError);
    CHECK_THROWS_AS(apply_setting(e, "methods", "vanilla,foo"), ConfigError);
    CHECK_THROWS_AS(apply_setting(e, "basis", "CX,RZ"), ConfigError);
    apply_setting(e, "alpha", "1.5");
    CHECK_THROWS_AS(e.validate(), ConfigError);
    e = {};
    apply_setting(e, "circuit", "/no/such.circ");
    CHECK_THROWS_AS(e.validate(), ConfigError);
    e = {};
    apply_setting(e, "dataset", "csv");
    CHECK_THROWS_AS(e.validate(), ConfigError);
}

TEST_CASE("canonical form round trips and hashes stably") {
    ExperimentConfig c;
    apply_setting(c, "rho", "0.1");
    apply_setting(c, "learning_rate", "0.03");
    apply_setting(c, "noise_p", "0.02");
    const auto text = canonical_config(c);
    const auto back = config_from_text(text);
    CHECK(canonical_config(back) == text);
    CHECK(config_hash(back) == config_hash(c));
}

TEST_CASE("hash changes with any setting") {
    ExperimentConfig a;
    ExperimentConfig b;
    apply_setting(b, "zeta", "0.001");
    CHECK(config_hash(a) != config_hash(b));
    CHECK(config_hash(a) == config_hash(ExperimentConfig{}));
}

TEST_CASE("config files") {
    const auto path = std::filesystem::temp_directory_path() / "qcompress_test_config.cfg";
    {
        std::ofstream out(path);
        out << "ratio = 0.3\n";
    }
    CHECK(load_config(path).admm.target_ratio == 0.3);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_config(path), IoError);
}
