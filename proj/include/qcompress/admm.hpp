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
#include <string_view>
#include <vector>

#include "qcompress/circuit.hpp"
#include "qcompress/dataset.hpp"
#include "qcompress/lut.hpp"
#include "qcompress/recl.hpp"
#include "qcompress/trainer.hpp"
#include "qcompress/transpiler.hpp"

namespace qcompress {

struct AdmmConfig {
    double rho = 5.0;
    double alpha = 0.5;
    double target_ratio = 0.5;
    double zeta = 1e-4;
    int max_iters = 15;
    int epochs_per_iter = 30;
    /// Epochs of the final mask-constrained retrain.
    int retrain_epochs = 100;
    /// Mask distance from θ + λ/ρ instead of θ + λ.
    bool scaled_lambda_distance = false;
    TauOrientation orientation = TauOrientation::Speedup;

    /// Throws ConfigError when a field is out of range.
    void validate() const;
};

/// Per-slot ADMM variables. Z and λ share the layout of θ.
struct AdmmState {
    ParameterVector theta;
    std::vector<double> z;
    std::vector<double> lambda;
    int iter = 0;
};

/// Per-trainable-gate selection (aligned with Circuit::trainable_gates()).
struct CompressionMask {
    std::vector<bool> bits;
    std::vector<double> scores;

    std::size_t count() const;
};

/// Scores each gate by alpha * dist / 2π + (1 - alpha) * depth / max_depth,
/// where dist is the circular distance from wrap(θ + λ) to its selected
/// level, and masks the round(ratio * |G|) lowest scores. Gates without a
/// level are never masked. Throws ConfigError for a ratio outside [0, 1].
CompressionMask build_mask(const Circuit &circuit, const ParameterVector &theta,
                           std::span<const double> lambda, const ReconstructedLUT &recon,
                           const AdmmConfig &config);

/// Masked gates take their level; every other slot keeps its previous Z.
std::vector<double> project_z(const Circuit &circuit, const AdmmState &state,
                              const CompressionMask &mask, const ReconstructedLUT &recon);

/// λ + ρ (θ - Z), with θ - Z as a circular residual.
std::vector<double> update_lambda(const AdmmState &state, double rho);

/// ||Δθ||² < ζ and ||ΔZ||² < ζ over circular residuals.
bool check_stop(const AdmmState &prev, const AdmmState &next, double zeta);

struct IterationRecord {
    int iter = 0;
    double loss = 0.0;
    double accuracy = 0.0; // train split
    int tcd = 0;           // TCD at θ
    double theta_z_gap = 0.0;
    double dtheta_sq = 0.0;
    double dz_sq = 0.0;
    std::size_t masked = 0;

    friend bool operator==(const IterationRecord &, const IterationRecord &) = default;
};

struct CompressionResult {
    ParameterVector params;
    CompressionMask mask;
    std::vector<IterationRecord> trace;
    int iterations = 0;
    bool converged = false;
    /// Set when max_iters ran out before the stopping rule fired.
    bool not_converged_warning = false;
    ReconstructedLUT recon;
};

/// Full compression loop from a trained warm start. ratio 0 returns the warm
/// start untouched. Training inside the loop uses `train` with seeds derived
/// from train_config.seed.
CompressionResult run_cqcp_admm(const Circuit &circuit, std::span<const Sample> train,
                                const CompressionLUT &lut, const BasisGateSet &basis,
                                const ParameterVector &warm_start, const AdmmConfig &config,
                                const TrainConfig &train_config);

enum class BaselineMode { ZeroOnlyPruning, PruneOnly, QuantOnly };

std::string_view baseline_name(BaselineMode mode) noexcept;

/// ZeroOnlyPruning zeroes the round(ratio * |G|) gates closest to 0 and
/// retrains the rest. PruneOnly / QuantOnly run the ADMM loop on the LUT
/// restricted to pruning / quantization levels.
CompressionResult baseline_compress(BaselineMode mode, const Circuit &circuit,
                                    std::span<const Sample> train, const CompressionLUT &lut,
                                    const BasisGateSet &basis, const ParameterVector &warm_start,
                                    const AdmmConfig &config, const TrainConfig &train_config);

/// Retrains the slots not marked in `frozen_slots`; frozen slots keep their values.
ParameterVector retrain_masked(const Circuit &circuit, std::span<const Sample> train,
                               ParameterVector params, const std::vector<bool> &frozen_slots,
                               const TrainConfig &train_config, int epochs);

} // namespace qcompress
