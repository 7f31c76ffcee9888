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

// Line-oriented circuit description format. Grammar in docs/circuit-format.md.
//
//   qubits 2
//   #encoder angle
//   RY 0 x0
//   #layers
//   CRX 0,1 free
//   #measure perqubitz 2

#include <filesystem>
#include <string>
#include <string_view>

#include "qcompress/circuit.hpp"

namespace qcompress {

/// Parses and validates a circuit description. Throws ParseError (with the
/// offending line number) on unknown tokens or structural errors.
Circuit parse_circuit(std::string_view text);

Circuit load_circuit(const std::filesystem::path &path);

/// Canonical text form; parse_circuit(format_circuit(c)) == c.
std::string format_circuit(const Circuit &circuit);

/// Parses an angle literal: 1.5, -pi/2, 3pi/2, 2*pi, pi.
double parse_angle(std::string_view token);

/// Built-in reference architectures: "syn4" (2 qubits, 14 trainable gates)
/// and "syn16" (4 qubits, 22 trainable gates). Throws ConfigError otherwise.
std::string_view reference_circuit_text(std::string_view name);
Circuit reference_circuit(std::string_view name);

} // namespace qcompress
