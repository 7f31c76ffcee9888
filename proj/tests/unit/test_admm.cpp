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

#include "catch_amalgamated.hpp"
#include "qcompress/admm.hpp"
#include "qcompress/angles.hpp"
#include "qcompress/circuit_io.hpp"
#include "qcompress/errors.hpp"

using namespace qcompress;
using Catch::Approx;

namespace {

// Three RX gates on one qubit with hand-set levels.
struct Toy {
    Circuit circuit = parse_circuit("qubits 1\n#layers\nRX 0 free\nRX 0 free\nRX 0 free\n"
                                    "#measure perqubitz 1\n");
    ReconstructedLUT recon;

    Toy() {
        const CompressionLevel levels[] = {{{0.0}, LevelTag::Prune, 0},
                                           {{kPi}, LevelTag::Quantize, 1},
                                           {{1.5 * kPi}, LevelTag::Quantize, 3}};
        for (std::size_t i = 0; i < 3; ++i) {
            recon.entries.push_back({i, GateKind::RX, levels[i], {}});
        }
    }
};

} // namespace

TEST_CASE("mask scores by hand") {
    Toy t;
    const ParameterVector theta(std::vector<double>{0.5, kPi + 0.1, 1.5 * kPi});
    const std::vector<double> lambda(3, 0.0);
    AdmmConfig cfg;
    cfg.alpha = 0.5;
    cfg.target_ratio = 1.0 / 3.0;
    const auto m = build_mask(t.circuit, theta, lambda, t.recon, cfg);
    CHECK(m.scores[0] == Approx(0.5 * 0.5 / kTwoPi));
    CHECK(m.scores[1] == Approx(0.5 * 0.1 / kTwoPi + 0.5 / 3.0));
    CHECK(m.scores[2] == Approx(0.5));
    CHECK(m.bits == std::vector<bool>{true, false, false});

    // λ enters the distance unscaled unless configured otherwise.
    const std::vector<double> lam{-0.5, 0.0, 0.0};
    CHECK(build_mask(t.circuit, theta, lam, t.recon, cfg).scores[0] == Approx(0.0).margin(1e-12));
    cfg.scaled_lambda_distance = true;
    cfg.rho = 2.0;
    CHECK(build_mask(t.circuit, theta, lam, t.recon, cfg).scores[0] ==
          Approx(0.5 * 0.25 / kTwoPi));
}

TEST_CASE("mask cardinality") {
    Toy t;
    const ParameterVector theta(std::vector<double>{1.0, 2.0, 3.0});
    const std::vector<double> lambda(3, 0.0);
    AdmmConfig cfg;
    for (double ratio : {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0}) {
        cfg.target_ratio = ratio;
        const auto m = build_mask(t.circuit, theta, lambda, t.recon, cfg);
        REQUIRE(m.count() == static_cast<std::size_t>(std::llround(ratio * 3)));
    }
    cfg.target_ratio = 1.5;
    CHECK_THROWS_AS(build_mask(t.circuit, theta, lambda, t.recon, cfg), ConfigError);
    // Gates without a level are never masked.
    t.recon.entries[1].level.reset();
    cfg.target_ratio = 1.0;
    CHECK(build_mask(t.circuit, theta, lambda, t.recon, cfg).bits ==
          std::vector<bool>{true, false, true});
}

TEST_CASE("Z projection") {
    Toy t;
    AdmmState s{ParameterVector(std::vector<double>{0.1, 0.2, 0.3}), {0.1, 0.2, 0.3}, {0, 0, 0}, 1};
    CompressionMask all{{true, true, true}, {}};
    CHECK(project_z(t.circuit, s, all, t.recon) == std::vector<double>{0.0, kPi, 1.5 * kPi});
    CompressionMask none{{false, false, false}, {}};
    CHECK(project_z(t.circuit, s, none, t.recon) == s.z);
}

TEST_CASE("lambda update") {
    AdmmState s{ParameterVector(std::vector<double>{1.0, 2.0}), {1.0, 1.5}, {0.0, 0.25}, 1};
    const auto l = update_lambda(s, 1.0);
    CHECK(l[0] == 0.0);
    CHECK(l[1] == Approx(0.75));
    // Fixed residual: linear growth.
    for (int r = 0; r < 3; ++r) {
        s.lambda = update_lambda(s, 2.0);
    }
    CHECK(s.lambda[1] == Approx(0.25 + 3 * 2.0 * 0.5));
    // Residuals wrap around the circle.
    AdmmState w{ParameterVector(std::vector<double>{0.1}), {kFourPi - 0.1}, {0.0}, 1};
    CHECK(update_lambda(w, 1.0)[0] == Approx(0.2));
}

TEST_CASE("stopping rule") {
    AdmmState a{ParameterVector(std::vector<double>{1.0, 2.0}), {1.0, 2.0}, {0, 0}, 1};
    CHECK(check_stop(a, a, 1e-4));
    AdmmState b = a;
    b.theta.set(0, 2.0);
    CHECK_FALSE(check_stop(a, b, 1e-4));
    AdmmState c = a;
    c.theta.set(0, 1.0 + 0.01);
    c.z[0] = 1.0 + 0.01;
    const double d = circular_residual(1.0, 1.01);
    // Both squared norms equal zeta: strict inequality fails.
    CHECK_FALSE(check_stop(a, c, d * d));
    CHECK(check_stop(a, c, d * d * (1 + 1e-9)));
}

TEST_CASE("config validation") {
    AdmmConfig c;
    c.rho = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.alpha = 1.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.zeta = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
}

namespace {

struct Syn4 {
    Circuit circuit = reference_circuit("syn4");
    Dataset data = generate_synthetic(4, 100, 0);
    BasisGateSet basis;
    CompressionLUT lut = build_lut(circuit, basis);
    TrainConfig train;
    ParameterVector warm = sgd_train(circuit, init_params(circuit, 0), data.train, train).params;
};

} // namespace

TEST_CASE("ratio 0 returns the warm start") {
    Syn4 s;
    AdmmConfig cfg;
    cfg.target_ratio = 0.0;
    const auto r = run_cqcp_admm(s.circuit, s.data.train, s.lut, s.basis, s.warm, cfg, s.train);
    CHECK(r.params == s.warm);
    CHECK(r.mask.count() == 0);
    const auto z = baseline_compress(BaselineMode::ZeroOnlyPruning, s.circuit, s.data.train,
                                     s.lut, s.basis, s.warm, cfg, s.train);
    CHECK(z.params == s.warm);
}

TEST_CASE("compression is feasible and reduces depth") {
    Syn4 s;
    AdmmConfig cfg;
    cfg.target_ratio = 0.5;
    const auto r = run_cqcp_admm(s.circuit, s.data.train, s.lut, s.basis, s.warm, cfg, s.train);
    REQUIRE(r.mask.count() == 7);
    const auto gates = s.circuit.trainable_gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (r.mask.bits[i]) {
            const auto slot = s.circuit.slots_of(gates[i])[0];
            REQUIRE(r.params[slot] == r.recon.entries[i].level->value[0]);
        }
    }
    CHECK(circuit_tcd(s.circuit, r.params, s.basis) < circuit_tcd(s.circuit, s.warm, s.basis));
    CHECK_FALSE(r.trace.empty());
    CHECK(r.converged == !r.not_converged_warning);
}

TEST_CASE("larger rho shrinks the final theta-Z gap") {
    Syn4 s;
    AdmmConfig cfg;
    cfg.target_ratio = 0.5;
    double prev = 1e300;
    for (double rho : {0.05, 5.0, 500.0}) {
        cfg.rho = rho;
        const auto r = run_cqcp_admm(s.circuit, s.data.train, s.lut, s.basis, s.warm, cfg, s.train);
        const double gap = r.trace.back().theta_z_gap;
        CHECK(gap < prev);
        prev = gap;
    }
}

TEST_CASE("baselines") {
    Syn4 s;
    AdmmConfig cfg;
    cfg.target_ratio = 0.3;
    const auto z = baseline_compress(BaselineMode::ZeroOnlyPruning, s.circuit, s.data.train,
                                     s.lut, s.basis, s.warm, cfg, s.train);
    REQUIRE(z.mask.count() == 4);
    const auto gates = s.circuit.trainable_gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (z.mask.bits[i]) {
            REQUIRE(z.params[s.circuit.slots_of(gates[i])[0]] == 0.0);
        }
    }
    const auto q = baseline_compress(BaselineMode::QuantOnly, s.circuit, s.data.train, s.lut,
                                     s.basis, s.warm, cfg, s.train);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (q.mask.bits[i]) {
            REQUIRE(q.recon.entries[i].level->tag == LevelTag::Quantize);
        }
    }
    CHECK(baseline_name(BaselineMode::PruneOnly) == "prune-only");
}
