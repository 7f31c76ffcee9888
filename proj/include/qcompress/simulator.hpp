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

#include <span>
#include <vector>

#include "qcompress/circuit.hpp"
#include "qcompress/linalg.hpp"

namespace qcompress {

/// Dense pure state over n qubits; qubit 0 is the least significant bit of
/// the basis index.
class StateVector {
  public:
    StateVector() : StateVector(1) {}
    /// |0...0>.
    explicit StateVector(int n_qubits);

    /// Takes ownership of 2^n amplitudes. Throws SpecError on a size mismatch.
    static StateVector from_amplitudes(int n_qubits, std::vector<Complex> amps);

    /// Computational basis state |index>.
    static StateVector basis(int n_qubits, std::size_t index);

    int n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return amps_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amps_; }
    std::span<Complex> amplitudes() noexcept { return amps_; }
    const Complex &operator[](std::size_t i) const { return amps_[i]; }

    double norm_squared() const;
    std::vector<double> probabilities() const;

    /// In-place application of a resolved gate.
    void apply(GateKind kind, std::span<const int> qubits, std::span<const double> params);
    void apply(const PhysicalGate &g) { apply(g.kind, g.qubits, g.params); }

  private:
    int n_qubits_;
    std::vector<Complex> amps_;
};

/// |ψ'> = G|ψ>. Throws QubitIndexError if the gate does not fit the state.
StateVector apply_gate(StateVector state, const Gate &gate, const ParameterVector &params,
                       std::span<const double> features = {});

/// Applies the encoder (with `features`) then the trainable layers, in list
/// order, to `input`.
StateVector run_circuit(const Circuit &circuit, const ParameterVector &params,
                        StateVector input, std::span<const double> features = {});

/// Class scores before softmax. PerQubitZ: <Z_k> for k < n_classes.
/// StateGrouping: sum of |amp|^2 over each group. Throws SpecError when the
/// spec asks for more outputs than the state provides.
std::vector<double> measure_outputs(const StateVector &state, const MeasurementSpec &spec);

/// Same read-out applied to a probability vector.
std::vector<double> outputs_from_probabilities(std::span<const double> probs, int n_qubits,
                                               const MeasurementSpec &spec);

std::vector<double> softmax(std::span<const double> x);

} // namespace qcompress
