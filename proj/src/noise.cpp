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
#include "qcompress/noise.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qcompress/errors.hpp"

namespace qcompress {

void NoiseModel::validate() const {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValueError("noise probability must lie in [0, 1], got " + std::to_string(p));
    }
    if (shots == 0) {
        throw ValueError("noise model needs at least one shot");
    }
}

void run_physical(const TranspiledCircuit &physical, StateVector &state) {
    for (const auto &g : physical.gates) {
        state.apply(g);
    }
}

namespace {

// 1 = X, 2 = Y, 3 = Z; global phases dropped.
void apply_pauli(std::span<Complex> amps, int qubit, int which) {
    const std::size_t bit = std::size_t{1} << qubit;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & bit) {
            continue;
        }
        Complex &a0 = amps[i];
        Complex &a1 = amps[i | bit];
        switch (which) {
        case 1:
            std::swap(a0, a1);
            break;
        case 2: {
            const Complex t = a0;
            a0 = Complex(a1.imag(), -a1.real()); // -i * a1
            a1 = Complex(-t.imag(), t.real());   //  i * a0
            break;
        }
        case 3:
            a1 = -a1;
            break;
        default:
            break;
        }
    }
}

StateVector trajectory(const TranspiledCircuit &physical, const StateVector &input, double p,
                       std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> pauli(0, 3);
    StateVector s = input;
    for (const auto &g : physical.gates) {
        s.apply(g);
        for (int q : g.qubits) {
            if (coin(rng) < p) {
                apply_pauli(s.amplitudes(), q, pauli(rng));
            }
        }
    }
    return s;
}

} // namespace

std::vector<double> noisy_outputs(const TranspiledCircuit &physical, const StateVector &input,
                                  const MeasurementSpec &spec, const NoiseModel &model,
                                  std::uint64_t seed) {
    model.validate();
    if (input.n_qubits() != physical.n_qubits) {
        throw SpecError("input state does not match the physical circuit width");
    }
    if (model.p == 0.0) {
        StateVector s = input;
        run_physical(physical, s);
        return measure_outputs(s, spec);
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const std::size_t dim = input.dim();
    std::vector<double> acc(dim, 0.0);
    std::vector<double> cdf(dim);
    for (std::size_t shot = 0; shot < model.shots; ++shot) {
        const StateVector s = trajectory(physical, input, model.p, rng);
        const auto probs = s.probabilities();
        if (model.estimator == NoiseModel::Estimator::TrajectoryMean) {
            for (std::size_t i = 0; i < dim; ++i) {
                acc[i] += probs[i];
            }
            continue;
        }
        double run = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            run += probs[i];
            cdf[i] = run;
        }
        const double u = uniform(rng) * run;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const auto idx = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), dim - 1);
        acc[idx] += 1.0;
    }
    for (auto &v : acc) {
        v /= static_cast<double>(model.shots);
    }
    return outputs_from_probabilities(acc, input.n_qubits(), spec);
}

} // namespace qcompress
