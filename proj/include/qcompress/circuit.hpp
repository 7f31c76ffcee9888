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
#include <span>
#include <vector>

#include "qcompress/angles.hpp"
#include "qcompress/gates.hpp"

namespace qcompress {

/// Where a gate angle comes from.
struct ParamRef {
    enum class Source { Slot, Constant, Feature };

    Source source = Source::Constant;
    std::size_t index = 0; // slot or feature index
    double value = 0.0;    // constant angle

    static ParamRef slot(std::size_t i) { return {Source::Slot, i, 0.0}; }
    static ParamRef constant(double v) { return {Source::Constant, 0, v}; }
    static ParamRef feature(std::size_t k) { return {Source::Feature, k, 0.0}; }

    friend bool operator==(const ParamRef &, const ParamRef &) = default;
};

/// Feature-referencing encoder angles are pi * feature.
inline constexpr double kFeatureAngleScale = kPi;

struct Gate {
    GateKind kind = GateKind::ID;
    std::vector<int> qubits; // qubits[0] is the control for controlled kinds
    std::vector<ParamRef> params;
    bool trainable = false;

    friend bool operator==(const Gate &, const Gate &) = default;
};

/// Trainable angles; every stored value is kept in [0, 4π).
class ParameterVector {
  public:
    ParameterVector() = default;
    explicit ParameterVector(std::size_t n) : values_(n, 0.0) {}
    explicit ParameterVector(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    void set(std::size_t i, double v);
    std::span<const double> values() const noexcept { return values_; }

    friend bool operator==(const ParameterVector &, const ParameterVector &) = default;

  private:
    std::vector<double> values_;
};

enum class MeasurementScheme { PerQubitZ, StateGrouping };

struct MeasurementSpec {
    int n_classes = 2;
    MeasurementScheme scheme = MeasurementScheme::PerQubitZ;
    std::vector<std::vector<std::size_t>> groups; // StateGrouping only

    /// Throws SpecError when the spec cannot be read out of n_qubits.
    void validate(int n_qubits) const;

    friend bool operator==(const MeasurementSpec &, const MeasurementSpec &) = default;
};

/// How classical features enter the circuit.
enum class EncodingScheme { Angle, Amplitude };

/// Encoder U(x), trainable layers W(θ), measurement M.
class Circuit {
  public:
    int n_qubits = 1;
    EncodingScheme encoding = EncodingScheme::Angle;
    std::vector<Gate> encoder;
    std::vector<Gate> layers;
    MeasurementSpec measurement;

    /// Checks qubit ranges, arities, slot coverage (each slot referenced
    /// exactly once, contiguous from 0), encoder gates non-trainable.
    /// Throws QubitIndexError / ArityError / SpecError.
    void validate() const;

    std::size_t num_params() const;

    /// Indices into `layers` of trainable gates, in order. This is the gate
    /// set G that compression masks and reconstructed LUTs are aligned with.
    std::vector<std::size_t> trainable_gates() const;

    /// Parameter slots read by layers[gate].
    std::vector<std::size_t> slots_of(std::size_t gate) const;

    friend bool operator==(const Circuit &, const Circuit &) = default;
};

/// Resolves a gate's angles against parameters and input features.
std::vector<double> resolve_params(const Gate &gate, const ParameterVector &params,
                                   std::span<const double> features = {});

} // namespace qcompress
