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
#include "qcompress/admm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qcompress/angles.hpp"
#include "qcompress/errors.hpp"

namespace qcompress {

void AdmmConfig::validate() const {
    if (!(rho > 0.0)) {
        throw ConfigError("rho must be positive");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ConfigError("alpha must lie in (0, 1)");
    }
    if (!(target_ratio >= 0.0 && target_ratio <= 1.0)) {
        throw ConfigError("target ratio must lie in [0, 1]");
    }
    if (!(zeta > 0.0)) {
        throw ConfigError("zeta must be positive");
    }
    if (max_iters < 1 || epochs_per_iter < 1 || retrain_epochs < 0) {
        throw ConfigError("max_iters and epochs_per_iter must be positive");
    }
}

std::size_t CompressionMask::count() const {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), true));
}

namespace {

std::vector<double> slot_values(std::span<const double> v, const std::vector<std::size_t> &slots) {
    std::vector<double> out;
    out.reserve(slots.size());
    for (std::size_t s : slots) {
        out.push_back(v[s]);
    }
    return out;
}

double squared_residual_norm(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double r = circular_residual(a[i], b[i]);
        acc += r * r;
    }
    return acc;
}

// Indices of the k smallest scores; ties keep gate order.
std::vector<bool> lowest(std::span<const double> scores, std::size_t k) {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
    std::vector<bool> bits(scores.size(), false);
    for (std::size_t i = 0; i < k && i < order.size(); ++i) {
        if (std::isfinite(scores[order[i]])) {
            bits[order[i]] = true;
        }
    }
    return bits;
}

std::size_t mask_size(double ratio, std::size_t n) {
    return static_cast<std::size_t>(std::llround(ratio * static_cast<double>(n)));
}

std::vector<bool> frozen_slots(const Circuit &circuit, const std::vector<bool> &gate_bits) {
    std::vector<bool> frozen(circuit.num_params(), false);
    const auto gates = circuit.trainable_gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (gate_bits[i]) {
            for (std::size_t s : circuit.slots_of(gates[i])) {
                frozen[s] = true;
            }
        }
    }
    return frozen;
}

} // namespace

CompressionMask build_mask(const Circuit &circuit, const ParameterVector &theta,
                           std::span<const double> lambda, const ReconstructedLUT &recon,
                           const AdmmConfig &config) {
    if (!(config.target_ratio >= 0.0 && config.target_ratio <= 1.0)) {
        throw ConfigError("target ratio must lie in [0, 1]");
    }
    const auto gates = circuit.trainable_gates();
    if (recon.entries.size() != gates.size()) {
        throw SpecError("reconstructed LUT does not match the circuit's trainable gates");
    }
    const int max_depth = recon.max_depth();
    CompressionMask mask;
    mask.scores.assign(gates.size(), std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const auto &level = recon.entries[i].level;
        if (!level) {
            continue;
        }
        const auto slots = circuit.slots_of(gates[i]);
        std::vector<double> shifted;
        for (std::size_t s : slots) {
            const double l = config.scaled_lambda_distance ? lambda[s] / config.rho : lambda[s];
            shifted.push_back(wrap_param(theta[s] + l));
        }
        const double dist = circular_distance(shifted, level->value);
        const double depth =
            max_depth > 0 ? static_cast<double>(level->depth) / static_cast<double>(max_depth)
                          : 0.0;
        mask.scores[i] = config.alpha * dist / kTwoPi + (1.0 - config.alpha) * depth;
    }
    mask.bits = lowest(mask.scores, mask_size(config.target_ratio, gates.size()));
    return mask;
}

std::vector<double> project_z(const Circuit &circuit, const AdmmState &state,
                              const CompressionMask &mask, const ReconstructedLUT &recon) {
    std::vector<double> z = state.z;
    const auto gates = circuit.trainable_gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (!mask.bits[i] || !recon.entries[i].level) {
            continue;
        }
        const auto slots = circuit.slots_of(gates[i]);
        const auto &value = recon.entries[i].level->value;
        for (std::size_t k = 0; k < slots.size(); ++k) {
            z[slots[k]] = value[k];
        }
    }
    return z;
}

std::vector<double> update_lambda(const AdmmState &state, double rho) {
    std::vector<double> out = state.lambda;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += rho * circular_residual(state.theta[i], state.z[i]);
    }
    return out;
}

bool check_stop(const AdmmState &prev, const AdmmState &next, double zeta) {
    return squared_residual_norm(prev.theta.values(), next.theta.values()) < zeta &&
           squared_residual_norm(prev.z, next.z) < zeta;
}

ParameterVector retrain_masked(const Circuit &circuit, std::span<const Sample> train,
                               ParameterVector params, const std::vector<bool> &frozen,
                               const TrainConfig &train_config, int epochs) {
    if (epochs <= 0 || std::all_of(frozen.begin(), frozen.end(), [](bool b) { return b; })) {
        return params;
    }
    TrainConfig cfg = train_config;
    cfg.epochs = epochs;
    TrainOptions opts;
    opts.frozen = frozen;
    return sgd_train(circuit, params, train, cfg, opts).params;
}

CompressionResult run_cqcp_admm(const Circuit &circuit, std::span<const Sample> train,
                                const CompressionLUT &lut, const BasisGateSet &basis,
                                const ParameterVector &warm_start, const AdmmConfig &config,
                                const TrainConfig &train_config) {
    config.validate();
    const auto gates = circuit.trainable_gates();
    CompressionResult result;
    result.params = warm_start;
    result.mask.bits.assign(gates.size(), false);
    result.mask.scores.assign(gates.size(), 0.0);
    if (mask_size(config.target_ratio, gates.size()) == 0) {
        result.converged = true;
        return result;
    }

    result.recon = reconstruct_lut(circuit, warm_start, lut, train, basis, config.orientation);

    AdmmState state{warm_start,
                    {warm_start.values().begin(), warm_start.values().end()},
                    std::vector<double>(warm_start.size(), 0.0),
                    0};
    CompressionMask mask;
    for (int r = 1; r <= config.max_iters; ++r) {
        TrainConfig cfg = train_config;
        cfg.epochs = config.epochs_per_iter;
        cfg.seed = train_config.seed + 7919ULL * static_cast<std::uint64_t>(r);
        TrainOptions opts;
        opts.proximal = Proximal{state.z, state.lambda, config.rho};

        AdmmState next;
        next.iter = r;
        next.theta = sgd_train(circuit, state.theta, train, cfg, opts).params;
        mask = build_mask(circuit, next.theta, state.lambda, result.recon, config);
        next.z = state.z;
        next.lambda = state.lambda;
        next.z = project_z(circuit, next, mask, result.recon);
        next.lambda = update_lambda(next, config.rho);

        const auto m = loss_and_accuracy(circuit, next.theta, train);
        IterationRecord rec;
        rec.iter = r;
        rec.loss = m.loss;
        rec.accuracy = m.accuracy;
        rec.tcd = circuit_tcd(circuit, next.theta, basis);
        rec.theta_z_gap = std::sqrt(squared_residual_norm(next.theta.values(), next.z));
        rec.dtheta_sq = squared_residual_norm(state.theta.values(), next.theta.values());
        rec.dz_sq = squared_residual_norm(state.z, next.z);
        rec.masked = mask.count();
        result.trace.push_back(rec);

        const bool stop = check_stop(state, next, config.zeta);
        state = std::move(next);
        result.iterations = r;
        if (stop) {
            result.converged = true;
            break;
        }
    }
    result.not_converged_warning = !result.converged;

    // Pin masked gates to their levels and recover accuracy on the rest.
    ParameterVector params = state.theta;
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (mask.bits[i]) {
            params = with_gate_value(circuit, params, i, result.recon.entries[i].level->value);
        }
    }
    TrainConfig retrain_cfg = train_config;
    retrain_cfg.seed = train_config.seed + 104729ULL;
    result.params = retrain_masked(circuit, train, params, frozen_slots(circuit, mask.bits),
                                   retrain_cfg, config.retrain_epochs);
    result.mask = std::move(mask);
    return result;
}

std::string_view baseline_name(BaselineMode mode) noexcept {
    switch (mode) {
    case BaselineMode::ZeroOnlyPruning:
        return "zero-only-pruning";
    case BaselineMode::PruneOnly:
        return "prune-only";
    case BaselineMode::QuantOnly:
        return "quant-only";
    }
    return "unknown";
}

CompressionResult baseline_compress(BaselineMode mode, const Circuit &circuit,
                                    std::span<const Sample> train, const CompressionLUT &lut,
                                    const BasisGateSet &basis, const ParameterVector &warm_start,
                                    const AdmmConfig &config, const TrainConfig &train_config) {
    if (mode == BaselineMode::PruneOnly) {
        return run_cqcp_admm(circuit, train, lut.filtered(LevelTag::Prune), basis, warm_start,
                             config, train_config);
    }
    if (mode == BaselineMode::QuantOnly) {
        return run_cqcp_admm(circuit, train, lut.filtered(LevelTag::Quantize), basis,
                             warm_start, config, train_config);
    }

    config.validate();
    const auto gates = circuit.trainable_gates();
    CompressionResult result;
    result.params = warm_start;
    result.converged = true;
    result.mask.scores.resize(gates.size());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const auto v = slot_values(warm_start.values(), circuit.slots_of(gates[i]));
        result.mask.scores[i] = circular_distance(v, std::vector<double>(v.size(), 0.0));
    }
    result.mask.bits = lowest(result.mask.scores, mask_size(config.target_ratio, gates.size()));
    if (result.mask.count() == 0) {
        return result;
    }
    ParameterVector params = warm_start;
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (result.mask.bits[i]) {
            const std::vector<double> zeros(circuit.slots_of(gates[i]).size(), 0.0);
            params = with_gate_value(circuit, params, i, zeros);
        }
    }
    TrainConfig retrain_cfg = train_config;
    retrain_cfg.seed = train_config.seed + 104729ULL;
    result.params = retrain_masked(circuit, train, params, frozen_slots(circuit, result.mask.bits),
                                   retrain_cfg, config.retrain_epochs);
    return result;
}

} // namespace qcompress
