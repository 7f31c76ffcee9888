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
#include <sstream>

#include "catch_amalgamated.hpp"
#include "qcompress/circuit_io.hpp"
#include "qcompress/errors.hpp"
#include "qcompress/recl.hpp"
#include "qcompress/trainer.hpp"

using namespace qcompress;
using Catch::Approx;

namespace {

struct Fixture {
    Circuit circuit = reference_circuit("syn4");
    Dataset data = generate_synthetic(4, 60, 4);
    BasisGateSet basis;
    CompressionLUT lut = build_lut(circuit, basis);
    ParameterVector params;

    Fixture() {
        TrainConfig cfg;
        cfg.epochs = 40;
        params = sgd_train(circuit, init_params(circuit, 4), data.train, cfg).params;
    }
};

} // namespace

TEST_CASE("reconstruction picks the exhaustive argmax from the LUT") {
    Fixture f;
    const auto recon = reconstruct_lut(f.circuit, f.params, f.lut, f.data.train, f.basis);
    const auto gates = f.circuit.trainable_gates();
    REQUIRE(recon.entries.size() == gates.size());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const auto &e = recon.entries[i];
        CHECK(e.layer_index == gates[i]);
        REQUIRE(e.level.has_value());
        const auto &entry = f.lut.entry(e.kind);
        REQUIRE(std::find(entry.begin(), entry.end(), *e.level) != entry.end());
        double best = -1.0;
        for (const auto &l : entry) {
            best = std::max(best, level_metric(f.circuit, f.params, i, l, f.data.train, f.basis).metric);
        }
        CHECK(e.score.metric == Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("metric definition: accuracy times speedup") {
    Fixture f;
    const int base = circuit_tcd(f.circuit, f.params, f.basis);
    const CompressionLevel zero{{0.0}, LevelTag::Prune, 0};
    const auto s = level_metric(f.circuit, f.params, 2, zero, f.data.train, f.basis);
    const auto moved = with_gate_value(f.circuit, f.params, 2, zero.value);
    const double acc = loss_and_accuracy(f.circuit, moved, f.data.train).accuracy;
    const int tcd = circuit_tcd(f.circuit, moved, f.basis);
    CHECK(s.tcd == tcd);
    CHECK(s.metric == Approx(acc * base / tcd));
    const auto r = level_metric(f.circuit, f.params, 2, zero, f.data.train, f.basis,
                                TauOrientation::Ratio);
    CHECK(r.metric == Approx(acc * tcd / base));
}

TEST_CASE("reconstruction is deterministic and serializes") {
    Fixture f;
    const auto a = reconstruct_lut(f.circuit, f.params, f.lut, f.data.train, f.basis);
    const auto b = reconstruct_lut(f.circuit, f.params, f.lut, f.data.train, f.basis);
    std::ostringstream sa, sb;
    a.write_csv(sa);
    b.write_csv(sb);
    CHECK(sa.str() == sb.str());
    CHECK(sa.str().rfind("gate_index,kind,level,depth,metric\n", 0) == 0);
}

TEST_CASE("missing LUT kinds are reported") {
    Fixture f;
    CompressionLUT partial;
    partial.set_entry(GateKind::RX, f.lut.entry(GateKind::RX));
    CHECK_THROWS_AS(reconstruct_lut(f.circuit, f.params, partial, f.data.train, f.basis),
                    LutError);
}

TEST_CASE("with_gate_value touches only that gate's slots") {
    Fixture f;
    const double v[] = {1.0};
    const auto p = with_gate_value(f.circuit, f.params, 3, v);
    const auto slot = f.circuit.slots_of(f.circuit.trainable_gates()[3])[0];
    for (std::size_t i = 0; i < p.size(); ++i) {
        REQUIRE(p[i] == (i == slot ? 1.0 : f.params[i]));
    }
}
