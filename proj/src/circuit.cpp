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
#include "qcompress/circuit.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qcompress/angles.hpp"
#include "qcompress/errors.hpp"

namespace qcompress {

ParameterVector::ParameterVector(std::vector<double> values) : values_(std::move(values)) {
    for (auto &v : values_) {
        v = wrap_param(v);
    }
}

void ParameterVector::set(std::size_t i, double v) { values_.at(i) = wrap_param(v); }

void MeasurementSpec::validate(int n_qubits) const {
    if (n_classes < 1) {
        throw SpecError("measurement needs at least one class");
    }
    if (scheme == MeasurementScheme::PerQubitZ) {
        if (n_classes > n_qubits) {
            throw SpecError("PerQubitZ readout of " + std::to_string(n_classes) +
                            " classes needs at least that many qubits, have " +
                            std::to_string(n_qubits));
        }
        return;
    }
    if (static_cast<int>(groups.size()) != n_classes) {
        throw SpecError("StateGrouping needs one group per class");
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    std::set<std::size_t> seen;
    for (const auto &g : groups) {
        if (g.empty()) {
            throw SpecError("StateGrouping group is empty");
        }
        for (std::size_t idx : g) {
            if (idx >= dim) {
                throw SpecError("basis state " + std::to_string(idx) + " out of range");
            }
            if (!seen.insert(idx).second) {
                throw SpecError("StateGrouping groups overlap at basis state " +
                                std::to_string(idx));
            }
        }
    }
}

namespace {

void validate_gate(const Gate &g, int n_qubits, bool in_encoder) {
    const auto name = std::string(gate_name(g.kind));
    if (static_cast<int>(g.qubits.size()) != qubit_count(g.kind)) {
        throw ArityError(name + " acts on " + std::to_string(qubit_count(g.kind)) +
                         " qubit(s)");
    }
    for (int q : g.qubits) {
        if (q < 0 || q >= n_qubits) {
            throw QubitIndexError(name + ": qubit " + std::to_string(q) + " out of range");
        }
    }
    if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1]) {
        throw QubitIndexError(name + ": control and target coincide");
    }
    if (static_cast<int>(g.params.size()) != arity(g.kind)) {
        throw ArityError(name + " expects " + std::to_string(arity(g.kind)) + " parameter(s)");
    }
    const bool has_slot = std::any_of(g.params.begin(), g.params.end(), [](const ParamRef &p) {
        return p.source == ParamRef::Source::Slot;
    });
    if (in_encoder && (g.trainable || has_slot)) {
        throw SpecError("encoder gates cannot be trainable");
    }
    if (!in_encoder) {
        const bool has_feature =
            std::any_of(g.params.begin(), g.params.end(), [](const ParamRef &p) {
                return p.source == ParamRef::Source::Feature;
            });
        if (has_feature) {
            throw SpecError("feature references are only allowed in the encoder");
        }
        const bool all_slots =
            !g.params.empty() &&
            std::all_of(g.params.begin(), g.params.end(), [](const ParamRef &p) {
                return p.source == ParamRef::Source::Slot;
            });
        if (g.trainable != all_slots) {
            throw SpecError(name + ": trainable gates must reference one slot per angle");
        }
    }
}

} // namespace

void Circuit::validate() const {
    if (n_qubits < 1 || n_qubits > 8) {
        throw SpecError("circuits must have 1..8 qubits");
    }
    for (const auto &g : encoder) {
        validate_gate(g, n_qubits, true);
    }
    if (encoding == EncodingScheme::Amplitude && !encoder.empty()) {
        throw SpecError("amplitude encoding takes no encoder gates");
    }
    std::vector<int> uses;
    for (const auto &g : layers) {
        validate_gate(g, n_qubits, false);
        for (const auto &p : g.params) {
            if (p.source == ParamRef::Source::Slot) {
                if (p.index >= uses.size()) {
                    uses.resize(p.index + 1, 0);
                }
                ++uses[p.index];
            }
        }
    }
    for (std::size_t i = 0; i < uses.size(); ++i) {
        if (uses[i] != 1) {
            throw SpecError("parameter slot " + std::to_string(i) + " is referenced " +
                            std::to_string(uses[i]) + " times; expected exactly once");
        }
    }
    measurement.validate(n_qubits);
}

std::size_t Circuit::num_params() const {
    std::size_t n = 0;
    for (const auto &g : layers) {
        for (const auto &p : g.params) {
            if (p.source == ParamRef::Source::Slot) {
                n = std::max(n, p.index + 1);
            }
        }
    }
    return n;
}

std::vector<std::size_t> Circuit::trainable_gates() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        if (layers[i].trainable) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::size_t> Circuit::slots_of(std::size_t gate) const {
    std::vector<std::size_t> out;
    for (const auto &p : layers.at(gate).params) {
        if (p.source == ParamRef::Source::Slot) {
            out.push_back(p.index);
        }
    }
    return out;
}

std::vector<double> resolve_params(const Gate &gate, const ParameterVector &params,
                                   std::span<const double> features) {
    std::vector<double> out;
    out.reserve(gate.params.size());
    for (const auto &p : gate.params) {
        switch (p.source) {
        case ParamRef::Source::Slot:
            if (p.index >= params.size()) {
                throw SpecError("parameter slot " + std::to_string(p.index) + " out of range");
            }
            out.push_back(params[p.index]);
            break;
        case ParamRef::Source::Constant:
            out.push_back(p.value);
            break;
        case ParamRef::Source::Feature:
            if (p.index >= features.size()) {
                throw SpecError("feature " + std::to_string(p.index) + " out of range");
            }
            out.push_back(kFeatureAngleScale * features[p.index]);
            break;
        }
    }
    return out;
}

} // namespace qcompress
