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
#include <filesystem>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcompress/circuit.hpp"
#include "qcompress/gates.hpp"
#include "qcompress/linalg.hpp"

namespace qcompress {

/// Gate kinds the target executes natively. Must contain CX, RZ and SX; X and
/// ID are optional (X is emitted as SX·SX when absent).
class BasisGateSet {
  public:
    /// {CX, ID, RZ, SX, X}.
    BasisGateSet();
    /// Throws SpecError if CX, RZ or SX is missing.
    BasisGateSet(std::initializer_list<GateKind> kinds);
    explicit BasisGateSet(std::set<GateKind> kinds);

    /// Comma-separated gate names, e.g. "CX,ID,RZ,SX,X".
    static BasisGateSet parse(std::string_view text);

    bool contains(GateKind k) const { return kinds_.count(k) != 0; }
    const std::set<GateKind> &kinds() const noexcept { return kinds_; }
    std::string to_string() const;

    friend bool operator==(const BasisGateSet &, const BasisGateSet &) = default;

  private:
    void validate() const;
    std::set<GateKind> kinds_;
};

/// Physical gates of one logical gate. The logical unitary equals
/// global_phase times the product of `gates` (applied in order).
struct Decomposition {
    std::vector<PhysicalGate> gates;
    Complex global_phase{1.0, 0.0};
};

/// Lowers one gate to basis gates. Angles are used as given (callers pass
/// wrapped parameters); special-angle templates are chosen within
/// kAngleSnapTol. A gate whose matrix is c·I lowers to nothing.
/// Throws UnsupportedGateError for kinds the basis cannot express.
Decomposition decompose_gate(GateKind kind, std::span<const int> qubits,
                             std::span<const double> params, const BasisGateSet &basis);

struct TranspiledCircuit {
    int n_qubits = 1;
    std::vector<PhysicalGate> gates;
    /// source_map[j] is the logical gate gates[j] came from. For layer-only
    /// transpilation this indexes Circuit::layers; for full transpilation
    /// encoder gates come first, then layers offset by encoder.size().
    std::vector<std::size_t> source_map;
    /// Source unitary = global_phase * transpiled unitary.
    Complex global_phase{1.0, 0.0};
};

/// Merges adjacent RZ on a wire, drops RZ(≡0 mod 2π) and ID. Never
/// increases depth; the removed phase is folded into global_phase.
TranspiledCircuit peephole_optimize(const TranspiledCircuit &circuit);

/// Decomposes the trainable layers and peephole-optimizes. The encoder is
/// excluded: depth reported for a circuit is the depth of W(θ).
TranspiledCircuit transpile_circuit(const Circuit &circuit, const ParameterVector &params,
                                    const BasisGateSet &basis);

/// Encoder (resolved against `features`) followed by the layers.
TranspiledCircuit transpile_full(const Circuit &circuit, const ParameterVector &params,
                                 std::span<const double> features, const BasisGateSet &basis);

/// Lowers a plain gate list (no slots) on n qubits.
TranspiledCircuit transpile_gates(int n_qubits, std::span<const PhysicalGate> gates,
                                  const BasisGateSet &basis);

/// Longest path through the gate DAG; gates conflict iff they share a qubit.
int circuit_depth(const TranspiledCircuit &circuit);

/// Transpiled depth of a single gate placed on fresh qubits.
int standalone_gate_depth(GateKind kind, std::span<const double> params,
                          const BasisGateSet &basis);

/// TCD of a circuit's trainable layers at `params`.
int circuit_tcd(const Circuit &circuit, const ParameterVector &params,
                const BasisGateSet &basis);

/// Angle classes used to tabulate standalone depths.
struct ParamClass {
    std::string label; // "0", "pi", ..., "others"
    double value;
};
const std::vector<ParamClass> &depth_table_classes();

/// Angle used for the "others" class.
inline constexpr double kGenericAngle = 1.234;

/// Standalone depth per (gate kind, angle class). For U3/CU3 the class value
/// is used for all three angles.
class DepthTable {
  public:
    struct Row {
        GateKind kind;
        std::string param_class;
        int depth;
        friend bool operator==(const Row &, const Row &) = default;
    };

    static DepthTable build(const BasisGateSet &basis, std::span<const GateKind> kinds);
    /// RX, RY, RZ, CRX, CRY, CRZ, U3, CU3.
    static DepthTable build(const BasisGateSet &basis);

    const std::vector<Row> &rows() const noexcept { return rows_; }
    /// Throws SpecError when the cell is absent.
    int depth(GateKind kind, std::string_view param_class) const;

    /// CSV with header gate,param_class,depth.
    void write_csv(std::ostream &out) const;
    static DepthTable read_csv(std::istream &in);
    static DepthTable load_csv(const std::filesystem::path &path);

    friend bool operator==(const DepthTable &, const DepthTable &) = default;

  private:
    std::vector<Row> rows_;
};

} // namespace qcompress
