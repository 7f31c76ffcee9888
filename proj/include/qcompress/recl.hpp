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
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "qcompress/circuit.hpp"
#include "qcompress/dataset.hpp"
#include "qcompress/lut.hpp"
#include "qcompress/transpiler.hpp"

namespace qcompress {

/// Direction of the depth factor in the level metric.
enum class TauOrientation {
    Speedup, // TCD(θ) / TCD(θ')
    Ratio,   // TCD(θ') / TCD(θ)
};

/// acc * tau for one (gate, level) perturbation.
struct LevelScore {
    double accuracy = 0.0;
    int tcd = 0;
    double metric = 0.0;
    /// A zero TCD was replaced by 1 to keep tau finite.
    bool zero_tcd_guard = false;
};

/// `gate` is an ordinal into circuit.trainable_gates(). Every slot of that
/// gate is set to `level`; all other parameters keep their values.
LevelScore level_metric(const Circuit &circuit, const ParameterVector &params, std::size_t gate,
                        const CompressionLevel &level, std::span<const Sample> eval_data,
                        const BasisGateSet &basis,
                        TauOrientation orientation = TauOrientation::Speedup);

/// The same metric for an arbitrary parameter point against a reference TCD.
LevelScore point_metric(const Circuit &circuit, const ParameterVector &candidate,
                        int reference_tcd, std::span<const Sample> eval_data,
                        const BasisGateSet &basis,
                        TauOrientation orientation = TauOrientation::Speedup);

/// One selected level per trainable gate.
struct ReconstructedLUT {
    struct Entry {
        std::size_t layer_index = 0; // index into Circuit::layers
        GateKind kind = GateKind::ID;
        /// Empty when the LUT offers no level for this kind.
        std::optional<CompressionLevel> level;
        LevelScore score;
    };

    std::vector<Entry> entries; // aligned with Circuit::trainable_gates()
    bool zero_tcd_guard = false;

    /// Largest stored level depth (0 when none).
    int max_depth() const;

    /// CSV with header gate_index,kind,level,depth,metric.
    void write_csv(std::ostream &out) const;
};

/// For each gate independently, the level maximizing level_metric. Ties go
/// to smaller depth, then smaller value. Throws LutError when a trainable
/// kind has no LUT key.
ReconstructedLUT reconstruct_lut(const Circuit &circuit, const ParameterVector &params,
                                 const CompressionLUT &lut, std::span<const Sample> eval_data,
                                 const BasisGateSet &basis,
                                 TauOrientation orientation = TauOrientation::Speedup);

/// Copy of `params` with every slot of trainable gate `gate` set to `value`.
ParameterVector with_gate_value(const Circuit &circuit, const ParameterVector &params,
                                std::size_t gate, std::span<const double> value);

} // namespace qcompress
