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

#include <iosfwd>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "qcompress/circuit.hpp"
#include "qcompress/transpiler.hpp"

namespace qcompress {

enum class LevelTag { Prune, Quantize };

std::string_view level_tag_name(LevelTag tag) noexcept;

/// An angle tuple at which a gate compiles to fewer physical gates.
/// Prune: the gate is c·I and vanishes. Quantize: depth below generic.
struct CompressionLevel {
    std::vector<double> value; // one entry per gate angle, each in [0, 4π)
    LevelTag tag = LevelTag::Quantize;
    int depth = 0;

    friend bool operator==(const CompressionLevel &, const CompressionLevel &) = default;
};

/// Depth-then-value ordering used for LUT entries and tie breaks.
bool level_less(const CompressionLevel &a, const CompressionLevel &b);

/// Tolerance for the c·I test on candidate levels.
inline constexpr double kPruneTol = 1e-10;

/// All multiples of `step` in [0, 4π) per angle; the Cartesian product for
/// three-angle kinds.
std::vector<std::vector<double>> default_candidates(GateKind kind, double step = kPi / 2);

std::vector<CompressionLevel> find_pruning_levels(GateKind kind,
                                                  std::span<const std::vector<double>> candidates);

/// Candidates whose standalone depth is below generic_depth(kind), pruning
/// levels excluded.
std::vector<CompressionLevel>
find_quantization_levels(GateKind kind, const BasisGateSet &basis,
                         std::span<const std::vector<double>> candidates);

/// Standalone depth at a generic angle (the maximum over angles).
int generic_depth(GateKind kind, const BasisGateSet &basis);

/// Compression-level lookup table keyed by gate kind. Entries are sorted by
/// level_less.
class CompressionLUT {
  public:
    using Entry = std::vector<CompressionLevel>;

    const std::map<GateKind, Entry> &entries() const noexcept { return entries_; }
    bool contains(GateKind kind) const { return entries_.count(kind) != 0; }
    /// Throws LutError for an unknown kind.
    const Entry &entry(GateKind kind) const;
    void set_entry(GateKind kind, Entry levels);

    /// Copy keeping only levels with the given tag. Entries may become empty.
    CompressionLUT filtered(LevelTag tag) const;

    /// CSV with header gate,value,tag,depth; multi-angle values are
    /// ';'-separated.
    void write_csv(std::ostream &out) const;

    friend bool operator==(const CompressionLUT &, const CompressionLUT &) = default;

  private:
    std::map<GateKind, Entry> entries_;
};

/// LUT for the given kinds over the default π/2 grid.
CompressionLUT build_lut(std::span<const GateKind> kinds, const BasisGateSet &basis);

/// LUT for the trainable kinds present in the circuit's layers.
CompressionLUT build_lut(const Circuit &circuit, const BasisGateSet &basis);

/// Level closest to `theta` in circular (per-angle, [0,4π)) Euclidean
/// distance; ties go to smaller depth, then smaller value.
/// Throws LutError on an empty entry.
const CompressionLevel &nearest_level(std::span<const CompressionLevel> entry,
                                      std::span<const double> theta);
const CompressionLevel &nearest_level(std::span<const CompressionLevel> entry, double theta);

} // namespace qcompress
