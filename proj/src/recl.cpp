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
#include "qcompress/recl.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "qcompress/errors.hpp"
#include "qcompress/trainer.hpp"

namespace qcompress {

ParameterVector with_gate_value(const Circuit &circuit, const ParameterVector &params,
                                std::size_t gate, std::span<const double> value) {
    const auto gates = circuit.trainable_gates();
    if (gate >= gates.size()) {
        throw SpecError("trainable gate " + std::to_string(gate) + " out of range");
    }
    const auto slots = circuit.slots_of(gates[gate]);
    if (slots.size() != value.size()) {
        throw LutError("level arity does not match gate " + std::to_string(gate));
    }
    ParameterVector out = params;
    for (std::size_t k = 0; k < slots.size(); ++k) {
        out.set(slots[k], value[k]);
    }
    return out;
}

LevelScore point_metric(const Circuit &circuit, const ParameterVector &candidate,
                        int reference_tcd, std::span<const Sample> eval_data,
                        const BasisGateSet &basis, TauOrientation orientation) {
    LevelScore s;
    s.accuracy = loss_and_accuracy(circuit, candidate, eval_data).accuracy;
    s.tcd = circuit_tcd(circuit, candidate, basis);
    double num = reference_tcd;
    double den = s.tcd;
    if (orientation == TauOrientation::Ratio) {
        std::swap(num, den);
    }
    if (den == 0.0) {
        den = 1.0;
        s.zero_tcd_guard = true;
    }
    s.metric = s.accuracy * num / den;
    return s;
}

LevelScore level_metric(const Circuit &circuit, const ParameterVector &params, std::size_t gate,
                        const CompressionLevel &level, std::span<const Sample> eval_data,
                        const BasisGateSet &basis, TauOrientation orientation) {
    const int base = circuit_tcd(circuit, params, basis);
    return point_metric(circuit, with_gate_value(circuit, params, gate, level.value), base,
                        eval_data, basis, orientation);
}

int ReconstructedLUT::max_depth() const {
    int m = 0;
    for (const auto &e : entries) {
        if (e.level) {
            m = std::max(m, e.level->depth);
        }
    }
    return m;
}

void ReconstructedLUT::write_csv(std::ostream &out) const {
    out << "gate_index,kind,level,depth,metric\n";
    char buf[40];
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto &e = entries[i];
        out << i << ',' << gate_name(e.kind) << ',';
        if (!e.level) {
            out << ",,\n";
            continue;
        }
        for (std::size_t k = 0; k < e.level->value.size(); ++k) {
            std::snprintf(buf, sizeof buf, "%.17g", e.level->value[k]);
            out << (k ? ";" : "") << buf;
        }
        std::snprintf(buf, sizeof buf, "%.17g", e.score.metric);
        out << ',' << e.level->depth << ',' << buf << '\n';
    }
}

ReconstructedLUT reconstruct_lut(const Circuit &circuit, const ParameterVector &params,
                                 const CompressionLUT &lut, std::span<const Sample> eval_data,
                                 const BasisGateSet &basis, TauOrientation orientation) {
    constexpr double kTieTol = 1e-12;
    const int base = circuit_tcd(circuit, params, basis);
    const auto gates = circuit.trainable_gates();
    ReconstructedLUT out;
    out.entries.reserve(gates.size());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        ReconstructedLUT::Entry e;
        e.layer_index = gates[i];
        e.kind = circuit.layers[gates[i]].kind;
        for (const auto &level : lut.entry(e.kind)) {
            const auto cand = with_gate_value(circuit, params, i, level.value);
            const auto score = point_metric(circuit, cand, base, eval_data, basis, orientation);
            out.zero_tcd_guard = out.zero_tcd_guard || score.zero_tcd_guard;
            const bool better =
                !e.level || score.metric > e.score.metric + kTieTol ||
                (std::abs(score.metric - e.score.metric) <= kTieTol && level_less(level, *e.level));
            if (better) {
                e.level = level;
                e.score = score;
            }
        }
        out.entries.push_back(std::move(e));
    }
    return out;
}

} // namespace qcompress
