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
#include "qcompress/transpiler.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qcompress/angles.hpp"
#include "qcompress/errors.hpp"
#include "qcompress/simulator.hpp"

namespace qcompress {

// ---------------------------------------------------------------------------
// BasisGateSet

BasisGateSet::BasisGateSet()
    : kinds_{GateKind::CX, GateKind::ID, GateKind::RZ, GateKind::SX, GateKind::X} {}

BasisGateSet::BasisGateSet(std::initializer_list<GateKind> kinds) : kinds_(kinds) { validate(); }

BasisGateSet::BasisGateSet(std::set<GateKind> kinds) : kinds_(std::move(kinds)) { validate(); }

void BasisGateSet::validate() const {
    for (GateKind k : {GateKind::CX, GateKind::RZ, GateKind::SX}) {
        if (!contains(k)) {
            throw SpecError("basis gate set must contain " + std::string(gate_name(k)));
        }
    }
}

BasisGateSet BasisGateSet::parse(std::string_view text) {
    std::set<GateKind> kinds;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto name = text.substr(start, end - start);
        while (!name.empty() && name.front() == ' ') {
            name.remove_prefix(1);
        }
        while (!name.empty() && name.back() == ' ') {
            name.remove_suffix(1);
        }
        if (!name.empty()) {
            auto k = parse_gate_kind(name);
            if (!k) {
                throw SpecError("unknown basis gate '" + std::string(name) + "'");
            }
            kinds.insert(*k);
        }
        start = end + 1;
    }
    return BasisGateSet(std::move(kinds));
}

std::string BasisGateSet::to_string() const {
    std::string out;
    for (GateKind k : kinds_) {
        if (!out.empty()) {
            out += ',';
        }
        out += gate_name(k);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Decomposition

namespace {

constexpr double kPhaseTol = 1e-9;

bool near(double x, double target, double period) {
    return congruent(x, target, period, kAngleSnapTol);
}

class Emitter {
  public:
    explicit Emitter(const BasisGateSet &basis) : basis_(basis) {}

    void rz(int q, double a) {
        if (!near(a, 0.0, kTwoPi)) {
            gates_.push_back({GateKind::RZ, {q}, {a}});
        }
    }
    void sx(int q) { gates_.push_back({GateKind::SX, {q}, {}}); }
    void x(int q) {
        if (basis_.contains(GateKind::X)) {
            gates_.push_back({GateKind::X, {q}, {}});
        } else {
            sx(q);
            sx(q);
        }
    }
    void cx(int c, int t) { gates_.push_back({GateKind::CX, {c, t}, {}}); }

    // U3(theta, phi, lambda) on q as RZ/SX/X, in application order.
    void u3(int q, double theta, double phi, double lambda) {
        if (near(theta, 0.0, kTwoPi)) {
            rz(q, phi + lambda);
        } else if (near(theta, kPi / 2, kTwoPi)) {
            rz(q, lambda - kPi / 2);
            sx(q);
            rz(q, phi + kPi / 2);
        } else if (near(theta, 3 * kPi / 2, kTwoPi)) {
            rz(q, lambda + kPi / 2);
            sx(q);
            rz(q, phi + 3 * kPi / 2);
        } else if (near(theta, kPi, kTwoPi)) {
            x(q);
            rz(q, phi - lambda - kPi);
        } else {
            rz(q, lambda);
            sx(q);
            rz(q, theta + kPi);
            sx(q);
            rz(q, phi + kPi);
        }
    }

    void rx(int q, double theta) {
        if (near(theta, 3 * kPi / 2, kTwoPi)) {
            rz(q, -kPi);
            sx(q);
            rz(q, -kPi);
        } else if (near(theta, 0.0, kPi / 2)) {
            u3(q, theta, -kPi / 2, kPi / 2);
        } else {
            rz(q, kPi / 2);
            sx(q);
            rz(q, theta + kPi);
            sx(q);
            rz(q, 5 * kPi / 2);
        }
    }

    void ry(int q, double theta) { u3(q, theta, 0.0, 0.0); }

    std::vector<PhysicalGate> take() { return std::move(gates_); }

  private:
    const BasisGateSet &basis_;
    std::vector<PhysicalGate> gates_;
};

// Unitary of `gates` in the local basis of `wires`, where wires[0] is the
// most significant bit (matches gate_matrix's control-high convention).
DenseMatrix local_unitary(const std::vector<PhysicalGate> &gates, std::span<const int> wires) {
    const int n = static_cast<int>(wires.size());
    const std::size_t dim = std::size_t{1} << n;
    DenseMatrix u(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        auto s = StateVector::basis(n, col);
        for (const auto &g : gates) {
            std::vector<int> local;
            for (int q : g.qubits) {
                const auto it = std::find(wires.begin(), wires.end(), q);
                local.push_back(n - 1 - static_cast<int>(it - wires.begin()));
            }
            s.apply(g.kind, local, g.params);
        }
        for (std::size_t row = 0; row < dim; ++row) {
            u(row, col) = s[row];
        }
    }
    return u;
}

Complex phase_between(const DenseMatrix &logical, const std::vector<PhysicalGate> &gates,
                      std::span<const int> wires, GateKind kind) {
    const auto phase = logical.phase_relative_to(local_unitary(gates, wires), kPhaseTol);
    if (!phase) {
        throw std::logic_error("decomposition of " + std::string(gate_name(kind)) +
                               " does not reproduce its unitary");
    }
    return *phase;
}

} // namespace

Decomposition decompose_gate(GateKind kind, std::span<const int> qubits,
                             std::span<const double> params, const BasisGateSet &basis) {
    if (static_cast<int>(qubits.size()) != qubit_count(kind)) {
        throw ArityError(std::string(gate_name(kind)) + ": wrong number of qubits");
    }
    const DenseMatrix logical = gate_matrix(kind, params);
    Decomposition d;
    if (basis.contains(kind)) {
        d.gates.push_back({kind, {qubits.begin(), qubits.end()}, {params.begin(), params.end()}});
        return d;
    }
    if (auto c = logical.phase_relative_to(DenseMatrix::identity(logical.dim()), kPhaseTol)) {
        d.global_phase = *c;
        return d;
    }

    Emitter e(basis);
    const int q0 = qubits[0];
    const int q1 = qubits.size() > 1 ? qubits[1] : -1;
    switch (kind) {
    case GateKind::ID:
        break;
    case GateKind::X:
        e.x(q0);
        break;
    case GateKind::RX:
        e.rx(q0, wrap_param(params[0]));
        break;
    case GateKind::RY:
        e.ry(q0, wrap_param(params[0]));
        break;
    case GateKind::U3:
        e.u3(q0, params[0], params[1], params[2]);
        break;
    case GateKind::CRX: {
        const double t = wrap_param(params[0]);
        if (near(t, kTwoPi, kFourPi)) {
            // X on the target, commuted through the CX pair.
            e.rz(q1, kPi / 2);
            e.cx(q0, q1);
            e.rz(q1, kPi);
            e.cx(q0, q1);
            e.rz(q1, -3 * kPi / 2);
        } else {
            e.rz(q1, kPi / 2);
            e.cx(q0, q1);
            e.u3(q1, wrap_param(-t / 2), 0.0, 0.0);
            e.cx(q0, q1);
            e.u3(q1, t / 2, -kPi / 2, 0.0);
        }
        break;
    }
    case GateKind::CRY: {
        const double t = wrap_param(params[0]);
        e.ry(q1, t / 2);
        e.cx(q0, q1);
        e.ry(q1, wrap_param(-t / 2));
        e.cx(q0, q1);
        break;
    }
    case GateKind::CRZ: {
        const double t = wrap_param(params[0]);
        e.rz(q1, t / 2);
        e.cx(q0, q1);
        e.rz(q1, -t / 2);
        e.cx(q0, q1);
        break;
    }
    case GateKind::CU3: {
        const double t = params[0], p = params[1], l = params[2];
        e.rz(q0, (l + p) / 2);
        e.rz(q1, (l - p) / 2);
        e.cx(q0, q1);
        e.u3(q1, -t / 2, 0.0, -(p + l) / 2);
        e.cx(q0, q1);
        e.u3(q1, t / 2, p, 0.0);
        break;
    }
    default:
        throw UnsupportedGateError("cannot lower " + std::string(gate_name(kind)) +
                                   " into basis {" + basis.to_string() + "}");
    }
    d.gates = e.take();
    d.global_phase = phase_between(logical, d.gates, qubits, kind);
    return d;
}

// ---------------------------------------------------------------------------
// Circuit-level passes

TranspiledCircuit peephole_optimize(const TranspiledCircuit &circuit) {
    struct Entry {
        PhysicalGate gate;
        std::size_t source;
        bool live;
    };
    std::vector<Entry> out;
    out.reserve(circuit.gates.size());
    std::vector<std::vector<std::size_t>> wire(static_cast<std::size_t>(circuit.n_qubits));
    Complex phase = circuit.global_phase;

    // RZ(a) with a ≡ 0 (mod 2π) is ±I; dropping it moves the sign into the phase.
    const auto drop_rz = [&](double a) {
        if (!near(a, 0.0, kFourPi)) {
            phase = -phase;
        }
    };

    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
        const auto &g = circuit.gates[i];
        const std::size_t src = i < circuit.source_map.size() ? circuit.source_map[i] : 0;
        if (g.kind == GateKind::ID) {
            continue;
        }
        if (g.kind == GateKind::RZ) {
            auto &stack = wire[static_cast<std::size_t>(g.qubits[0])];
            if (!stack.empty() && out[stack.back()].gate.kind == GateKind::RZ) {
                auto &top = out[stack.back()];
                top.gate.params[0] += g.params[0];
                if (near(top.gate.params[0], 0.0, kTwoPi)) {
                    drop_rz(top.gate.params[0]);
                    top.live = false;
                    stack.pop_back();
                }
                continue;
            }
            if (near(g.params[0], 0.0, kTwoPi)) {
                drop_rz(g.params[0]);
                continue;
            }
        }
        for (int q : g.qubits) {
            wire[static_cast<std::size_t>(q)].push_back(out.size());
        }
        out.push_back({g, src, true});
    }

    TranspiledCircuit result;
    result.n_qubits = circuit.n_qubits;
    result.global_phase = phase;
    for (auto &e : out) {
        if (e.live) {
            result.gates.push_back(std::move(e.gate));
            result.source_map.push_back(e.source);
        }
    }
    return result;
}

namespace {

void append(TranspiledCircuit &tc, const Decomposition &d, std::size_t source) {
    for (const auto &g : d.gates) {
        tc.gates.push_back(g);
        tc.source_map.push_back(source);
    }
    tc.global_phase *= d.global_phase;
}

} // namespace

TranspiledCircuit transpile_gates(int n_qubits, std::span<const PhysicalGate> gates,
                                  const BasisGateSet &basis) {
    TranspiledCircuit tc;
    tc.n_qubits = n_qubits;
    for (std::size_t i = 0; i < gates.size(); ++i) {
        append(tc, decompose_gate(gates[i].kind, gates[i].qubits, gates[i].params, basis), i);
    }
    return peephole_optimize(tc);
}

TranspiledCircuit transpile_circuit(const Circuit &circuit, const ParameterVector &params,
                                    const BasisGateSet &basis) {
    TranspiledCircuit tc;
    tc.n_qubits = circuit.n_qubits;
    for (std::size_t i = 0; i < circuit.layers.size(); ++i) {
        const auto &g = circuit.layers[i];
        append(tc, decompose_gate(g.kind, g.qubits, resolve_params(g, params), basis), i);
    }
    return peephole_optimize(tc);
}

TranspiledCircuit transpile_full(const Circuit &circuit, const ParameterVector &params,
                                 std::span<const double> features, const BasisGateSet &basis) {
    TranspiledCircuit tc;
    tc.n_qubits = circuit.n_qubits;
    std::size_t idx = 0;
    for (const auto *part : {&circuit.encoder, &circuit.layers}) {
        for (const auto &g : *part) {
            append(tc,
                   decompose_gate(g.kind, g.qubits, resolve_params(g, params, features), basis),
                   idx++);
        }
    }
    return peephole_optimize(tc);
}

int circuit_depth(const TranspiledCircuit &circuit) {
    std::vector<int> level(static_cast<std::size_t>(circuit.n_qubits), 0);
    int depth = 0;
    for (const auto &g : circuit.gates) {
        int d = 0;
        for (int q : g.qubits) {
            d = std::max(d, level[static_cast<std::size_t>(q)]);
        }
        ++d;
        for (int q : g.qubits) {
            level[static_cast<std::size_t>(q)] = d;
        }
        depth = std::max(depth, d);
    }
    return depth;
}

int standalone_gate_depth(GateKind kind, std::span<const double> params,
                          const BasisGateSet &basis) {
    const int n = qubit_count(kind);
    std::vector<int> qubits(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        qubits[static_cast<std::size_t>(i)] = i;
    }
    std::vector<double> wrapped(params.begin(), params.end());
    for (auto &p : wrapped) {
        p = wrap_param(p);
    }
    const PhysicalGate g{kind, qubits, wrapped};
    return circuit_depth(transpile_gates(n, std::span(&g, 1), basis));
}

int circuit_tcd(const Circuit &circuit, const ParameterVector &params,
                const BasisGateSet &basis) {
    return circuit_depth(transpile_circuit(circuit, params, basis));
}

// ---------------------------------------------------------------------------
// DepthTable

const std::vector<ParamClass> &depth_table_classes() {
    static const std::vector<ParamClass> classes = {
        {"0", 0.0},
        {"pi", kPi},
        {"2pi", 2 * kPi},
        {"3pi", 3 * kPi},
        {"4pi", 4 * kPi},
        {"pi/2", kPi / 2},
        {"3pi/2", 3 * kPi / 2},
        {"5pi/2", 5 * kPi / 2},
        {"7pi/2", 7 * kPi / 2},
        {"others", kGenericAngle},
    };
    return classes;
}

DepthTable DepthTable::build(const BasisGateSet &basis, std::span<const GateKind> kinds) {
    DepthTable t;
    for (GateKind k : kinds) {
        for (const auto &c : depth_table_classes()) {
            const std::vector<double> params(static_cast<std::size_t>(arity(k)), c.value);
            t.rows_.push_back({k, c.label, standalone_gate_depth(k, params, basis)});
        }
    }
    return t;
}

DepthTable DepthTable::build(const BasisGateSet &basis) {
    static constexpr std::array kinds = {GateKind::RX,  GateKind::RY,  GateKind::RZ,
                                         GateKind::CRX, GateKind::CRY, GateKind::CRZ,
                                         GateKind::U3,  GateKind::CU3};
    return build(basis, kinds);
}

int DepthTable::depth(GateKind kind, std::string_view param_class) const {
    for (const auto &r : rows_) {
        if (r.kind == kind && r.param_class == param_class) {
            return r.depth;
        }
    }
    throw SpecError("depth table has no cell " + std::string(gate_name(kind)) + "/" +
                    std::string(param_class));
}

void DepthTable::write_csv(std::ostream &out) const {
    out << "gate,param_class,depth\n";
    for (const auto &r : rows_) {
        out << gate_name(r.kind) << ',' << r.param_class << ',' << r.depth << '\n';
    }
}

DepthTable DepthTable::read_csv(std::istream &in) {
    DepthTable t;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line_no == 1) {
            if (line != "gate,param_class,depth") {
                throw ParseError(line_no, "expected header gate,param_class,depth");
            }
            continue;
        }
        if (line.empty()) {
            continue;
        }
        std::stringstream ss(line);
        std::string gate, cls, depth;
        if (!std::getline(ss, gate, ',') || !std::getline(ss, cls, ',') ||
            !std::getline(ss, depth)) {
            throw ParseError(line_no, "expected three columns");
        }
        auto kind = parse_gate_kind(gate);
        if (!kind) {
            throw ParseError(line_no, "unknown gate '" + gate + "'");
        }
        int d = 0;
        try {
            std::size_t used = 0;
            d = std::stoi(depth, &used);
            if (used != depth.size() || d < 0) {
                throw std::invalid_argument(depth);
            }
        } catch (const std::exception &) {
            throw ParseError(line_no, "bad depth '" + depth + "'");
        }
        t.rows_.push_back({*kind, cls, d});
    }
    if (line_no == 0) {
        throw ParseError(1, "empty depth table");
    }
    return t;
}

DepthTable DepthTable::load_csv(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    return read_csv(in);
}

} // namespace qcompress
