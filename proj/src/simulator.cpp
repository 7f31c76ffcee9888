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
#include "qcompress/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcompress/errors.hpp"
#include "qcompress/simd/kernels.hpp"

namespace qcompress {

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 8) {
        throw SpecError("state vectors support 1..8 qubits");
    }
    amps_.assign(std::size_t{1} << n_qubits, Complex{});
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<Complex> amps) {
    StateVector s(n_qubits);
    if (amps.size() != s.dim()) {
        throw SpecError("expected " + std::to_string(s.dim()) + " amplitudes, got " +
                        std::to_string(amps.size()));
    }
    s.amps_ = std::move(amps);
    return s;
}

StateVector StateVector::basis(int n_qubits, std::size_t index) {
    StateVector s(n_qubits);
    if (index >= s.dim()) {
        throw QubitIndexError("basis index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

double StateVector::norm_squared() const {
    return simd::active_kernels().norm_squared(amps_.data(), amps_.size());
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    simd::active_kernels().probabilities(amps_.data(), amps_.size(), p.data());
    return p;
}

void StateVector::apply(GateKind kind, std::span<const int> qubits,
                        std::span<const double> params) {
    if (static_cast<int>(qubits.size()) != qubit_count(kind)) {
        throw ArityError(std::string(gate_name(kind)) + ": wrong number of qubits");
    }
    for (int q : qubits) {
        if (q < 0 || q >= n_qubits_) {
            throw QubitIndexError(std::string(gate_name(kind)) + ": qubit " +
                                  std::to_string(q) + " out of range for " +
                                  std::to_string(n_qubits_) + "-qubit state");
        }
    }
    if (kind == GateKind::ID) {
        return;
    }
    const Mat2 m = target_matrix(kind, params);
    const auto &k = simd::active_kernels();
    const auto n = static_cast<std::size_t>(n_qubits_);
    if (is_controlled(kind)) {
        if (qubits[0] == qubits[1]) {
            throw QubitIndexError("control and target coincide");
        }
        k.apply_controlled_1q(amps_.data(), n, static_cast<unsigned>(qubits[0]),
                              static_cast<unsigned>(qubits[1]), m);
    } else {
        k.apply_1q(amps_.data(), n, static_cast<unsigned>(qubits[0]), m);
    }
}

StateVector apply_gate(StateVector state, const Gate &gate, const ParameterVector &params,
                       std::span<const double> features) {
    const auto resolved = resolve_params(gate, params, features);
    state.apply(gate.kind, gate.qubits, resolved);
    return state;
}

StateVector run_circuit(const Circuit &circuit, const ParameterVector &params, StateVector input,
                        std::span<const double> features) {
    if (input.n_qubits() != circuit.n_qubits) {
        throw SpecError("input state has " + std::to_string(input.n_qubits()) +
                        " qubits, circuit has " + std::to_string(circuit.n_qubits));
    }
    for (const auto &g : circuit.encoder) {
        input.apply(g.kind, g.qubits, resolve_params(g, params, features));
    }
    for (const auto &g : circuit.layers) {
        input.apply(g.kind, g.qubits, resolve_params(g, params, features));
    }
    return input;
}

std::vector<double> outputs_from_probabilities(std::span<const double> probs, int n_qubits,
                                               const MeasurementSpec &spec) {
    spec.validate(n_qubits);
    std::vector<double> out(static_cast<std::size_t>(spec.n_classes), 0.0);
    if (spec.scheme == MeasurementScheme::PerQubitZ) {
        for (std::size_t i = 0; i < probs.size(); ++i) {
            for (std::size_t k = 0; k < out.size(); ++k) {
                out[k] += ((i >> k) & 1U) ? -probs[i] : probs[i];
            }
        }
        return out;
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (std::size_t idx : spec.groups[k]) {
            out[k] += probs[idx];
        }
    }
    return out;
}

std::vector<double> measure_outputs(const StateVector &state, const MeasurementSpec &spec) {
    const auto p = state.probabilities();
    return outputs_from_probabilities(p, state.n_qubits(), spec);
}

std::vector<double> softmax(std::span<const double> x) {
    std::vector<double> out(x.begin(), x.end());
    if (out.empty()) {
        return out;
    }
    const double top = *std::max_element(out.begin(), out.end());
    double total = 0.0;
    for (auto &v : out) {
        v = std::exp(v - top);
        total += v;
    }
    for (auto &v : out) {
        v /= total;
    }
    return out;
}

} // namespace qcompress
