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

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qcompress/linalg.hpp"

namespace qcompress {

enum class GateKind { RX, RY, RZ, CRX, CRY, CRZ, CX, SX, X, ID, U3, CU3 };

inline constexpr std::array<GateKind, 12> kAllGateKinds = {
    GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::CRX, GateKind::CRY, GateKind::CRZ,
    GateKind::CX, GateKind::SX, GateKind::X,  GateKind::ID,  GateKind::U3,  GateKind::CU3};

/// Number of angles the gate takes: 0, 1 or 3.
int arity(GateKind kind) noexcept;

/// Number of qubits the gate acts on: 1 or 2.
int qubit_count(GateKind kind) noexcept;

/// Two-qubit kinds are all controlled: qubits[0] is the control.
bool is_controlled(GateKind kind) noexcept;

/// The single-qubit kind applied to the target of a controlled kind
/// (CRX -> RX, CX -> X, CU3 -> U3). Identity mapping for 1-qubit kinds.
GateKind target_kind(GateKind kind) noexcept;

std::string_view gate_name(GateKind kind) noexcept;
std::optional<GateKind> parse_gate_kind(std::string_view name);

/// Unitary of the gate in its local basis. Two-qubit kinds use the
/// |control, target> ordering with the control as the high bit, which gives
/// the textbook block form diag(I, U). Angles are wrapped to their period
/// before evaluation. Throws ArityError on a parameter-count mismatch.
DenseMatrix gate_matrix(GateKind kind, std::span<const double> params);

/// 2x2 unitary applied to the target (the whole gate for 1-qubit kinds).
Mat2 target_matrix(GateKind kind, std::span<const double> params);

/// A gate with every parameter resolved to a number. Produced by the
/// transpiler (basis gates) and consumed by the simulator and noise model.
struct PhysicalGate {
    GateKind kind = GateKind::ID;
    std::vector<int> qubits;
    std::vector<double> params;

    friend bool operator==(const PhysicalGate &, const PhysicalGate &) = default;
};

} // namespace qcompress
