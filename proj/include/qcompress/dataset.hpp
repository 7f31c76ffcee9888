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

#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qcompress/circuit.hpp"
#include "qcompress/simulator.hpp"

namespace qcompress {

struct Sample {
    std::vector<double> features;
    int label = 0;

    friend bool operator==(const Sample &, const Sample &) = default;
};

struct Dataset {
    std::vector<Sample> train;
    std::vector<Sample> test;
    int n_classes = 2;
    std::uint64_t seed = 0;
};

/// Fraction of samples kept for training by split_dataset.
inline constexpr double kTrainFraction = 0.9;

/// Seeded shuffle followed by a round(0.9 n) / rest split.
Dataset split_dataset(std::vector<Sample> samples, int n_classes, std::uint64_t seed);

/// Two normal distributions used to draw synthetic features.
struct SyntheticConfig {
    double low_mean = 0.25;  // D1
    double high_mean = 0.75; // D2
    double stddev = 0.1;
};

/// Two balanced classes. Class 0 draws the first half of its features from
/// D1 and the second half from D2; class 1 is mirrored. Values are clipped
/// to [0, 1]. Throws ConfigError unless n_features is 4 or 16.
Dataset generate_synthetic(int n_features, std::size_t n_samples, std::uint64_t seed,
                           const SyntheticConfig &cfg = {});

/// Rows are `label,f1,...,fk`. With pool_28x28 each 784-feature row is
/// reduced to 16 features by 7x7 block averaging. Throws ParseError with the
/// 1-based line number on malformed rows.
Dataset parse_csv(std::string_view text, int n_classes, std::uint64_t seed,
                  bool pool_28x28 = false);
Dataset load_csv(const std::filesystem::path &path, int n_classes, std::uint64_t seed,
                 bool pool_28x28 = false);

/// 28x28 row-major image -> 4x4 row-major means of 7x7 blocks.
std::vector<double> average_pool_28x28(std::span<const double> image);

/// Angle-encoder gate plan: which rotation carries feature k, and where.
struct EncoderSpec {
    EncodingScheme scheme = EncodingScheme::Angle;
    std::vector<std::pair<GateKind, int>> gate_plan;

    /// 4 features: RY, RY, RZ, RZ; 16 features: 4 RY, 4 RZ, 4 RX, 4 RY;
    /// otherwise all RY. Qubits are assigned round-robin.
    static EncoderSpec angle(int n_features, int n_qubits);
    static EncoderSpec amplitude() { return {EncodingScheme::Amplitude, {}}; }

    /// Encoder gates referencing features 0..k-1.
    std::vector<Gate> gates() const;
};

/// Number of features the circuit's encoder consumes.
std::size_t feature_count(const Circuit &circuit);

/// features / ||features||_2 as a state. Throws EncodeError on a zero vector
/// or a length other than 2^n_qubits.
StateVector amplitude_state(std::span<const double> features, int n_qubits);

/// Initial state for a sample: amplitude-encoded, or |0...0> for angle
/// encoding (the encoder gates then carry the features). Throws EncodeError
/// on an arity mismatch.
StateVector initial_state(const Circuit &circuit, std::span<const double> features);

} // namespace qcompress
