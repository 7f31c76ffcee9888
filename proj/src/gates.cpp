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
#include "qcompress/gates.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "qcompress/angles.hpp"
#include "qcompress/errors.hpp"

namespace qcompress {

int arity(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::CX:
    case GateKind::SX:
    case GateKind::X:
    case GateKind::ID:
        return 0;
    case GateKind::U3:
    case GateKind::CU3:
        return 3;
    default:
        return 1;
    }
}

int qubit_count(GateKind kind) noexcept { return is_controlled(kind) ? 2 : 1; }

bool is_controlled(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::CRX:
    case GateKind::CRY:
    case GateKind::CRZ:
    case GateKind::CX:
    case GateKind::CU3:
        return true;
    default:
        return false;
    }
}

GateKind target_kind(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::CRX:
        return GateKind::RX;
    case GateKind::CRY:
        return GateKind::RY;
    case GateKind::CRZ:
        return GateKind::RZ;
    case GateKind::CX:
        return GateKind::X;
    case GateKind::CU3:
        return GateKind::U3;
    default:
        return kind;
    }
}

std::string_view gate_name(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::RX:
        return "RX";
    case GateKind::RY:
        return "RY";
    case GateKind::RZ:
        return "RZ";
    case GateKind::CRX:
        return "CRX";
    case GateKind::CRY:
        return "CRY";
    case GateKind::CRZ:
        return "CRZ";
    case GateKind::CX:
        return "CX";
    case GateKind::SX:
        return "SX";
    case GateKind::X:
        return "X";
    case GateKind::ID:
        return "ID";
    case GateKind::U3:
        return "U3";
    case GateKind::CU3:
        return "CU3";
    }
    return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
    for (GateKind k : kAllGateKinds) {
        const auto n = gate_name(k);
        if (n.size() != name.size()) {
            continue;
        }
        bool same = true;
        for (std::size_t i = 0; i < n.size(); ++i) {
            if (std::toupper(static_cast<unsigned char>(name[i])) != n[i]) {
                same = false;
                break;
            }
        }
        if (same) {
            return k;
        }
    }
    return std::nullopt;
}

namespace {

void check_arity(GateKind kind, std::span<const double> params) {
    if (static_cast<int>(params.size()) != arity(kind)) {
        throw ArityError(std::string(gate_name(kind)) + " expects " +
                         std::to_string(arity(kind)) + " parameter(s), got " +
                         std::to_string(params.size()));
    }
}

Mat2 single_qubit(GateKind kind, std::span<const double> p) {
    const Complex i{0.0, 1.0};
    switch (kind) {
    case GateKind::RX: {
        const double t = wrap_param(p[0]);
        const double c = std::cos(t / 2), s = std::sin(t / 2);
        return {c, -i * s, -i * s, c};
    }
    case GateKind::RY: {
        const double t = wrap_param(p[0]);
        const double c = std::cos(t / 2), s = std::sin(t / 2);
        return {c, -s, s, c};
    }
    case GateKind::RZ: {
        const double t = wrap_param(p[0]);
        return {std::polar(1.0, -t / 2), 0.0, 0.0, std::polar(1.0, t / 2)};
    }
    case GateKind::SX:
        return {Complex{0.5, 0.5}, Complex{0.5, -0.5}, Complex{0.5, -0.5}, Complex{0.5, 0.5}};
    case GateKind::X:
        return {0.0, 1.0, 1.0, 0.0};
    case GateKind::ID:
        return {1.0, 0.0, 0.0, 1.0};
    case GateKind::U3: {
        const double t = wrap_param(p[0]);
        const double phi = wrap_to(p[1], kTwoPi);
        const double lam = wrap_to(p[2], kTwoPi);
        const double c = std::cos(t / 2), s = std::sin(t / 2);
        return {c, -std::polar(1.0, lam) * s, std::polar(1.0, phi) * s,
                std::polar(1.0, phi + lam) * c};
    }
    default:
        break;
    }
    throw UnsupportedGateError("not a single-qubit kind: " + std::string(gate_name(kind)));
}

} // namespace

Mat2 target_matrix(GateKind kind, std::span<const double> params) {
    check_arity(kind, params);
    return single_qubit(target_kind(kind), params);
}

DenseMatrix gate_matrix(GateKind kind, std::span<const double> params) {
    const Mat2 u = target_matrix(kind, params);
    if (!is_controlled(kind)) {
        return DenseMatrix::from(u);
    }
    DenseMatrix m = DenseMatrix::identity(4);
    m(2, 2) = u[0];
    m(2, 3) = u[1];
    m(3, 2) = u[2];
    m(3, 3) = u[3];
    return m;
}

} // namespace qcompress
