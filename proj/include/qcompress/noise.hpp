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
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qcompress/circuit.hpp"
#include "qcompress/simulator.hpp"
#include "qcompress/transpiler.hpp"

namespace qcompress {

/// Per-gate depolarizing noise on physical circuits. After every physical
/// gate, each qubit it acts on independently suffers a Pauli drawn uniformly
/// from {I, X, Y, Z} with probability p.
struct NoiseModel {
    enum class Estimator {
        /// One trajectory and one measured bitstring per shot.
        Sampled,
        /// Exact read-out of each trajectory, averaged over shots.
        TrajectoryMean,
    };

    double p = 0.0;
    std::size_t shots = 4096;
    Estimator estimator = Estimator::Sampled;

    /// Throws ValueError unless 0 <= p <= 1 and shots > 0.
    void validate() const;
};

/// Noisy estimate of measure_outputs() for `physical` applied to `input`.
/// p = 0 returns the exact noiseless outputs. Deterministic given `seed`.
std::vector<double> noisy_outputs(const TranspiledCircuit &physical, const StateVector &input,
                                  const MeasurementSpec &spec, const NoiseModel &model,
                                  std::uint64_t seed);

/// Runs `physical` on `state` without noise.
void run_physical(const TranspiledCircuit &physical, StateVector &state);

} // namespace qcompress
