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
#include "qcompress/circuit_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "qcompress/angles.hpp"
#include "qcompress/errors.hpp"

namespace qcompress {

namespace {

// Keep in sync with circuits/*.circ (checked by test_circuit_io).
constexpr std::string_view kSyn4 = R"(// Reference classifier for 4-feature inputs: 2 qubits, 14 trainable gates.
qubits 2
#encoder angle
RY 0 x0
RY 1 x1
RZ 0 x2
RZ 1 x3
#layers
RY 0 free
RY 1 free
CRX 0,1 free
RZ 0 free
RZ 1 free
CRY 1,0 free
RX 0 free
RY 0 free
RY 1 free
CRZ 0,1 free
RX 0 free
RX 1 free
CRX 1,0 free
RZ 1 free
#measure perqubitz 2
)";

constexpr std::string_view kSyn16 = R"(// Reference classifier for 16-feature inputs: 4 qubits, 22 trainable gates.
qubits 4
#encoder angle
RY 0 x0
RY 1 x1
RY 2 x2
RY 3 x3
RZ 0 x4
RZ 1 x5
RZ 2 x6
RZ 3 x7
RX 0 x8
RX 1 x9
RX 2 x10
RX 3 x11
RY 0 x12
RY 1 x13
RY 2 x14
RY 3 x15
#layers
RY 0 free
RY 1 free
RY 2 free
RY 3 free
CRX 0,1 free
CRX 2,3 free
CRY 1,2 free
RX 0 free
RX 1 free
RX 2 free
RX 3 free
CRZ 0,1 free
CRY 2,3 free
CRX 3,0 free
RZ 0 free
RZ 1 free
RZ 2 free
RZ 3 free
CRY 0,1 free
CRX 1,2 free
CRZ 2,3 free
CRX 3,0 free
#measure perqubitz 2
)";

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

std::vector<std::string_view> tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
            ++i;
        }
        const std::size_t b = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') {
            ++i;
        }
        if (i > b) {
            out.push_back(s.substr(b, i - b));
        }
    }
    return out;
}

std::optional<double> to_double(std::string_view s) {
    if (s.empty()) {
        return std::nullopt;
    }
    double v = 0.0;
    const auto *end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

template <typename Int> std::optional<Int> to_int(std::string_view s) {
    Int v{};
    const auto *end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc{} || ptr != end) {
        return std::nullopt;
    }
    return v;
}

std::optional<double> try_parse_angle(std::string_view t) {
    t = trim(t);
    double sign = 1.0;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        sign = t[0] == '-' ? -1.0 : 1.0;
        t.remove_prefix(1);
    }
    const auto pi_at = t.find("pi");
    if (pi_at == std::string_view::npos) {
        if (auto v = to_double(t)) {
            return sign * *v;
        }
        return std::nullopt;
    }
    std::string_view coef = t.substr(0, pi_at);
    std::string_view rest = t.substr(pi_at + 2);
    if (!coef.empty() && coef.back() == '*') {
        coef.remove_suffix(1);
    }
    double c = 1.0;
    if (!coef.empty()) {
        auto v = to_double(coef);
        if (!v) {
            return std::nullopt;
        }
        c = *v;
    }
    double d = 1.0;
    if (!rest.empty()) {
        if (rest[0] != '/') {
            return std::nullopt;
        }
        auto v = to_double(rest.substr(1));
        if (!v || *v == 0.0) {
            return std::nullopt;
        }
        d = *v;
    }
    return sign * c * kPi / d;
}

std::vector<std::size_t> parse_group(std::string_view tok, std::size_t line) {
    std::vector<std::size_t> out;
    for (auto part : split(tok, ',')) {
        const auto dash = part.find('-');
        if (dash == std::string_view::npos) {
            auto v = to_int<std::size_t>(part);
            if (!v) {
                throw ParseError(line, "bad basis-state index '" + std::string(part) + "'");
            }
            out.push_back(*v);
            continue;
        }
        auto lo = to_int<std::size_t>(part.substr(0, dash));
        auto hi = to_int<std::size_t>(part.substr(dash + 1));
        if (!lo || !hi || *lo > *hi) {
            throw ParseError(line, "bad basis-state range '" + std::string(part) + "'");
        }
        for (std::size_t v = *lo; v <= *hi; ++v) {
            out.push_back(v);
        }
    }
    return out;
}

enum class Section { Header, Encoder, Layers, Measure };

} // namespace

double parse_angle(std::string_view token) {
    if (auto v = try_parse_angle(token)) {
        return *v;
    }
    throw ValueError("not an angle: '" + std::string(token) + "'");
}

Circuit parse_circuit(std::string_view text) {
    Circuit c;
    bool have_qubits = false;
    bool have_measure = false;
    Section section = Section::Header;
    std::size_t next_slot = 0;
    std::size_t line_no = 0;

    for (auto raw : split(text, '\n')) {
        ++line_no;
        auto line = trim(raw);
        if (const auto cpos = line.find("//"); cpos != std::string_view::npos) {
            line = trim(line.substr(0, cpos));
        }
        if (line.empty()) {
            continue;
        }
        const auto tok = tokens(line);
        const std::string head(tok[0]);

        if (head == "qubits") {
            if (have_qubits || tok.size() != 2) {
                throw ParseError(line_no, "expected a single 'qubits N' header");
            }
            auto n = to_int<int>(tok[1]);
            if (!n || *n < 1 || *n > 8) {
                throw ParseError(line_no, "qubit count must be 1..8");
            }
            c.n_qubits = *n;
            have_qubits = true;
            continue;
        }
        if (!have_qubits) {
            throw ParseError(line_no, "'qubits N' must come first");
        }
        if (head == "#encoder") {
            section = Section::Encoder;
            if (tok.size() > 2) {
                throw ParseError(line_no, "usage: #encoder [angle|amplitude]");
            }
            if (tok.size() == 2) {
                if (tok[1] == "angle") {
                    c.encoding = EncodingScheme::Angle;
                } else if (tok[1] == "amplitude") {
                    c.encoding = EncodingScheme::Amplitude;
                } else {
                    throw ParseError(line_no, "unknown encoding '" + std::string(tok[1]) + "'");
                }
            }
            continue;
        }
        if (head == "#layers") {
            if (tok.size() != 1) {
                throw ParseError(line_no, "unexpected tokens after #layers");
            }
            section = Section::Layers;
            continue;
        }
        if (head == "#measure") {
            if (tok.size() < 3) {
                throw ParseError(line_no, "usage: #measure <perqubitz|grouping> <classes> ...");
            }
            auto classes = to_int<int>(tok[2]);
            if (!classes || *classes < 1) {
                throw ParseError(line_no, "bad class count '" + std::string(tok[2]) + "'");
            }
            c.measurement.n_classes = *classes;
            if (tok[1] == "perqubitz") {
                if (tok.size() != 3) {
                    throw ParseError(line_no, "perqubitz takes no groups");
                }
                c.measurement.scheme = MeasurementScheme::PerQubitZ;
            } else if (tok[1] == "grouping") {
                c.measurement.scheme = MeasurementScheme::StateGrouping;
                for (std::size_t i = 3; i < tok.size(); ++i) {
                    c.measurement.groups.push_back(parse_group(tok[i], line_no));
                }
            } else {
                throw ParseError(line_no,
                                 "unknown measurement scheme '" + std::string(tok[1]) + "'");
            }
            try {
                c.measurement.validate(c.n_qubits);
            } catch (const SpecError &e) {
                throw ParseError(line_no, e.what());
            }
            have_measure = true;
            section = Section::Measure;
            continue;
        }
        if (head[0] == '#') {
            throw ParseError(line_no, "unknown section '" + head + "'");
        }
        if (section == Section::Header || section == Section::Measure) {
            throw ParseError(line_no, "gate outside #encoder/#layers");
        }

        auto kind = parse_gate_kind(tok[0]);
        if (!kind) {
            throw ParseError(line_no, "unknown gate '" + head + "'");
        }
        Gate g;
        g.kind = *kind;
        if (tok.size() < 2) {
            throw ParseError(line_no, "missing qubit list");
        }
        for (auto q : split(tok[1], ',')) {
            auto v = to_int<int>(q);
            if (!v) {
                throw ParseError(line_no, "bad qubit index '" + std::string(q) + "'");
            }
            if (*v < 0 || *v >= c.n_qubits) {
                throw ParseError(line_no, "qubit " + std::to_string(*v) + " out of range");
            }
            g.qubits.push_back(*v);
        }
        if (static_cast<int>(g.qubits.size()) != qubit_count(g.kind)) {
            throw ParseError(line_no, head + " acts on " + std::to_string(qubit_count(g.kind)) +
                                          " qubit(s)");
        }
        if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1]) {
            throw ParseError(line_no, "control and target coincide");
        }
        const int n_angles = arity(g.kind);
        if (tok.size() > 3) {
            throw ParseError(line_no, "unexpected token '" + std::string(tok[3]) + "'");
        }
        if (n_angles == 0) {
            if (tok.size() == 3) {
                throw ParseError(line_no, head + " takes no angle");
            }
        } else {
            if (tok.size() != 3) {
                throw ParseError(line_no, head + " needs an angle argument");
            }
            const auto arg = tok[2];
            const bool in_layers = section == Section::Layers;
            if (arg == "free" || arg == "free3") {
                if (!in_layers) {
                    throw ParseError(line_no, "trainable slots are only allowed in #layers");
                }
                if ((arg == "free") != (n_angles == 1)) {
                    throw ParseError(line_no, head + " needs '" +
                                                  (n_angles == 1 ? "free" : "free3") + "'");
                }
                for (int k = 0; k < n_angles; ++k) {
                    g.params.push_back(ParamRef::slot(next_slot++));
                }
                g.trainable = true;
            } else if (arg[0] == 'x' && n_angles == 1) {
                if (in_layers) {
                    throw ParseError(line_no, "feature references are only allowed in #encoder");
                }
                auto k = to_int<std::size_t>(arg.substr(1));
                if (!k) {
                    throw ParseError(line_no, "bad feature reference '" + std::string(arg) + "'");
                }
                g.params.push_back(ParamRef::feature(*k));
            } else {
                const auto parts = split(arg, ',');
                if (static_cast<int>(parts.size()) != n_angles) {
                    throw ParseError(line_no, head + " needs " + std::to_string(n_angles) +
                                                  " angle(s)");
                }
                for (auto p : parts) {
                    auto v = try_parse_angle(p);
                    if (!v) {
                        throw ParseError(line_no, "unknown token '" + std::string(p) + "'");
                    }
                    g.params.push_back(ParamRef::constant(*v));
                }
            }
        }
        if (section == Section::Encoder) {
            if (c.encoding == EncodingScheme::Amplitude) {
                throw ParseError(line_no, "amplitude encoding takes no encoder gates");
            }
            c.encoder.push_back(std::move(g));
        } else {
            c.layers.push_back(std::move(g));
        }
    }
    if (!have_qubits) {
        throw ParseError(line_no, "missing 'qubits N' header");
    }
    if (!have_measure) {
        throw ParseError(line_no, "missing #measure line");
    }
    try {
        c.validate();
    } catch (const Error &e) {
        throw ParseError(line_no, e.what());
    }
    return c;
}

Circuit load_circuit(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open circuit file " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_circuit(ss.str());
}

namespace {

std::string format_angle(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void format_gate(std::ostringstream &os, const Gate &g) {
    os << gate_name(g.kind) << ' ' << g.qubits[0];
    if (g.qubits.size() == 2) {
        os << ',' << g.qubits[1];
    }
    if (g.params.empty()) {
        os << '\n';
        return;
    }
    os << ' ';
    if (g.trainable) {
        os << (g.params.size() == 1 ? "free" : "free3") << '\n';
        return;
    }
    for (std::size_t i = 0; i < g.params.size(); ++i) {
        if (i) {
            os << ',';
        }
        const auto &p = g.params[i];
        if (p.source == ParamRef::Source::Feature) {
            os << 'x' << p.index;
        } else {
            os << format_angle(p.value);
        }
    }
    os << '\n';
}

} // namespace

std::string format_circuit(const Circuit &circuit) {
    std::ostringstream os;
    os << "qubits " << circuit.n_qubits << '\n';
    os << "#encoder " << (circuit.encoding == EncodingScheme::Angle ? "angle" : "amplitude")
       << '\n';
    for (const auto &g : circuit.encoder) {
        format_gate(os, g);
    }
    os << "#layers\n";
    for (const auto &g : circuit.layers) {
        format_gate(os, g);
    }
    const auto &m = circuit.measurement;
    os << "#measure "
       << (m.scheme == MeasurementScheme::PerQubitZ ? "perqubitz" : "grouping") << ' '
       << m.n_classes;
    for (const auto &grp : m.groups) {
        os << ' ';
        for (std::size_t i = 0; i < grp.size(); ++i) {
            os << (i ? "," : "") << grp[i];
        }
    }
    os << '\n';
    return os.str();
}

std::string_view reference_circuit_text(std::string_view name) {
    if (name == "syn4") {
        return kSyn4;
    }
    if (name == "syn16") {
        return kSyn16;
    }
    throw ConfigError("no reference circuit named '" + std::string(name) + "'");
}

Circuit reference_circuit(std::string_view name) {
    return parse_circuit(reference_circuit_text(name));
}

} // namespace qcompress
