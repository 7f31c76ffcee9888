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
#include "qcompress/lut.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <string>

#include "qcompress/angles.hpp"
#include "qcompress/errors.hpp"

namespace qcompress {

std::string_view level_tag_name(LevelTag tag) noexcept {
    return tag == LevelTag::Prune ? "prune" : "quantize";
}

bool level_less(const CompressionLevel &a, const CompressionLevel &b) {
    if (a.depth != b.depth) {
        return a.depth < b.depth;
    }
    return a.value < b.value;
}

std::vector<std::vector<double>> default_candidates(GateKind kind, double step) {
    if (!(step > 0.0)) {
        throw ValueError("candidate step must be positive");
    }
    std::vector<double> grid;
    for (int k = 0;; ++k) {
        const double v = k * step;
        if (v >= kFourPi - 1e-12) {
            break;
        }
        grid.push_back(v);
    }
    std::vector<std::vector<double>> out;
    switch (arity(kind)) {
    case 0:
        break;
    case 1:
        for (double v : grid) {
            out.push_back({v});
        }
        break;
    default:
        for (double t : grid) {
            for (double p : grid) {
                for (double l : grid) {
                    out.push_back({t, p, l});
                }
            }
        }
        break;
    }
    return out;
}

namespace {

std::vector<double> canonical(std::span<const double> v) {
    std::vector<double> out(v.begin(), v.end());
    for (auto &x : out) {
        x = wrap_param(x);
    }
    return out;
}

bool is_prune_point(GateKind kind, std::span<const double> v) {
    return gate_matrix(kind, v).is_phase_identity(kPruneTol);
}

void sort_unique(std::vector<CompressionLevel> &levels) {
    std::sort(levels.begin(), levels.end(), level_less);
    levels.erase(std::unique(levels.begin(), levels.end(),
                             [](const auto &a, const auto &b) { return a.value == b.value; }),
                 levels.end());
}

} // namespace

std::vector<CompressionLevel>
find_pruning_levels(GateKind kind, std::span<const std::vector<double>> candidates) {
    std::vector<CompressionLevel> out;
    for (const auto &c : candidates) {
        auto v = canonical(c);
        if (is_prune_point(kind, v)) {
            out.push_back({std::move(v), LevelTag::Prune, 0});
        }
    }
    sort_unique(out);
    return out;
}

int generic_depth(GateKind kind, const BasisGateSet &basis) {
    const std::vector<double> params(static_cast<std::size_t>(arity(kind)), kGenericAngle);
    return standalone_gate_depth(kind, params, basis);
}

std::vector<CompressionLevel>
find_quantization_levels(GateKind kind, const BasisGateSet &basis,
                         std::span<const std::vector<double>> candidates) {
    const int top = generic_depth(kind, basis);
    std::vector<CompressionLevel> out;
    for (const auto &c : candidates) {
        auto v = canonical(c);
        if (is_prune_point(kind, v)) {
            continue;
        }
        const int d = standalone_gate_depth(kind, v, basis);
        if (d < top) {
            out.push_back({std::move(v), LevelTag::Quantize, d});
        }
    }
    sort_unique(out);
    return out;
}

const CompressionLUT::Entry &CompressionLUT::entry(GateKind kind) const {
    const auto it = entries_.find(kind);
    if (it == entries_.end()) {
        throw LutError("no LUT entry for " + std::string(gate_name(kind)));
    }
    return it->second;
}

void CompressionLUT::set_entry(GateKind kind, Entry levels) {
    std::sort(levels.begin(), levels.end(), level_less);
    entries_[kind] = std::move(levels);
}

CompressionLUT CompressionLUT::filtered(LevelTag tag) const {
    CompressionLUT out;
    for (const auto &[kind, levels] : entries_) {
        Entry keep;
        std::copy_if(levels.begin(), levels.end(), std::back_inserter(keep),
                     [tag](const auto &l) { return l.tag == tag; });
        out.entries_[kind] = std::move(keep);
    }
    return out;
}

void CompressionLUT::write_csv(std::ostream &out) const {
    out << "gate,value,tag,depth\n";
    char buf[40];
    for (const auto &[kind, levels] : entries_) {
        for (const auto &l : levels) {
            out << gate_name(kind) << ',';
            for (std::size_t i = 0; i < l.value.size(); ++i) {
                std::snprintf(buf, sizeof buf, "%.17g", l.value[i]);
                out << (i ? ";" : "") << buf;
            }
            out << ',' << level_tag_name(l.tag) << ',' << l.depth << '\n';
        }
    }
}

CompressionLUT build_lut(std::span<const GateKind> kinds, const BasisGateSet &basis) {
    CompressionLUT lut;
    for (GateKind k : kinds) {
        if (lut.contains(k) || arity(k) == 0) {
            continue;
        }
        const auto cands = default_candidates(k);
        auto levels = find_pruning_levels(k, cands);
        auto quant = find_quantization_levels(k, basis, cands);
        levels.insert(levels.end(), quant.begin(), quant.end());
        lut.set_entry(k, std::move(levels));
    }
    return lut;
}

CompressionLUT build_lut(const Circuit &circuit, const BasisGateSet &basis) {
    std::set<GateKind> kinds;
    for (std::size_t i : circuit.trainable_gates()) {
        kinds.insert(circuit.layers[i].kind);
    }
    const std::vector<GateKind> list(kinds.begin(), kinds.end());
    return build_lut(list, basis);
}

const CompressionLevel &nearest_level(std::span<const CompressionLevel> entry,
                                      std::span<const double> theta) {
    if (entry.empty()) {
        throw LutError("nearest_level on an empty LUT entry");
    }
    constexpr double kTieTol = 1e-12;
    const CompressionLevel *best = nullptr;
    double best_d = 0.0;
    for (const auto &l : entry) {
        if (l.value.size() != theta.size()) {
            throw LutError("level arity does not match the parameter tuple");
        }
        const double d = circular_distance(theta, l.value);
        if (!best || d < best_d - kTieTol) {
            best = &l;
            best_d = d;
        } else if (std::abs(d - best_d) <= kTieTol && level_less(l, *best)) {
            best = &l;
            best_d = std::min(best_d, d);
        }
    }
    return *best;
}

const CompressionLevel &nearest_level(std::span<const CompressionLevel> entry, double theta) {
    return nearest_level(entry, std::span<const double>(&theta, 1));
}

} // namespace qcompress
