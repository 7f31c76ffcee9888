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
#include "qcompress/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "qcompress/angles.hpp"
#include "qcompress/errors.hpp"
#include "qcompress/simulator.hpp"

namespace qcompress {

void TrainConfig::validate() const {
    if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
        throw ConfigError("learning rate must be positive");
    }
    if (epochs < 1) {
        throw ConfigError("epochs must be positive");
    }
    if (batch_size < 1) {
        throw ConfigError("batch size must be positive");
    }
    if (!(momentum >= 0.0 && momentum < 1.0)) {
        throw ConfigError("momentum must lie in [0, 1)");
    }
}

ParameterVector init_params(const Circuit &circuit, std::uint64_t seed, InitScheme scheme) {
    std::vector<double> v(circuit.num_params(), 0.0);
    if (scheme == InitScheme::Uniform2Pi) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> u(0.0, kTwoPi);
        for (auto &x : v) {
            x = u(rng);
        }
    }
    return ParameterVector(std::move(v));
}

namespace {

constexpr double kMinProb = 1e-300;

StateVector encoded_state(const Circuit &circuit, const Sample &sample) {
    StateVector s = initial_state(circuit, sample.features);
    for (const auto &g : circuit.encoder) {
        s.apply(g.kind, g.qubits, resolve_params(g, {}, sample.features));
    }
    return s;
}

void check_label(const Circuit &circuit, const Sample &sample) {
    if (sample.label < 0 || sample.label >= circuit.measurement.n_classes) {
        throw DataError("label " + std::to_string(sample.label) + " outside [0, " +
                        std::to_string(circuit.measurement.n_classes) + ")");
    }
}

double cross_entropy(std::span<const double> probs, int label) {
    return -std::log(std::max(probs[static_cast<std::size_t>(label)], kMinProb));
}

int argmax(std::span<const double> v) {
    return static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin());
}

// Shift rule for one slot: derivative = sum_k coeff[k] * f(theta + shift[k]).
struct ShiftRule {
    std::vector<double> shifts;
    std::vector<double> coeffs;
};

ShiftRule rule_for(GateKind kind) {
    switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
        return {{kPi / 2, -kPi / 2}, {0.5, -0.5}};
    case GateKind::CRX:
    case GateKind::CRY:
    case GateKind::CRZ: {
        const double r2 = std::sqrt(2.0);
        const double cp = (r2 + 1.0) / (4.0 * r2);
        const double cm = (r2 - 1.0) / (4.0 * r2);
        return {{kPi / 2, -kPi / 2, 3 * kPi / 2, -3 * kPi / 2}, {cp, -cp, -cm, cm}};
    }
    default: {
        constexpr double h = 1e-5;
        return {{h, -h}, {0.5 / h, -0.5 / h}};
    }
    }
}

// Runs layers[from..] on `state` with per-gate resolved angles.
std::vector<double> finish(const Circuit &circuit, const std::vector<std::vector<double>> &angles,
                           StateVector state, std::size_t from) {
    for (std::size_t j = from; j < circuit.layers.size(); ++j) {
        state.apply(circuit.layers[j].kind, circuit.layers[j].qubits, angles[j]);
    }
    return measure_outputs(state, circuit.measurement);
}

std::vector<std::vector<double>> resolve_layers(const Circuit &circuit,
                                                const ParameterVector &params) {
    std::vector<std::vector<double>> out;
    out.reserve(circuit.layers.size());
    for (const auto &g : circuit.layers) {
        out.push_back(resolve_params(g, params));
    }
    return out;
}

// Adds the gradient of one sample's loss to `grad`; returns the loss.
double accumulate_sample(const Circuit &circuit, std::vector<std::vector<double>> &angles,
                         const Sample &sample, std::vector<double> &grad) {
    check_label(circuit, sample);
    const std::size_t m = circuit.layers.size();
    std::vector<StateVector> prefix;
    prefix.reserve(m + 1);
    prefix.push_back(encoded_state(circuit, sample));
    for (std::size_t j = 0; j < m; ++j) {
        StateVector next = prefix.back();
        next.apply(circuit.layers[j].kind, circuit.layers[j].qubits, angles[j]);
        prefix.push_back(std::move(next));
    }
    const auto outputs = measure_outputs(prefix.back(), circuit.measurement);
    const auto probs = softmax(outputs);
    std::vector<double> dl_do(probs);
    dl_do[static_cast<std::size_t>(sample.label)] -= 1.0;

    for (std::size_t j = 0; j < m; ++j) {
        const auto &g = circuit.layers[j];
        if (!g.trainable) {
            continue;
        }
        const ShiftRule rule = rule_for(g.kind);
        for (std::size_t a = 0; a < g.params.size(); ++a) {
            const double base = angles[j][a];
            double d = 0.0;
            for (std::size_t s = 0; s < rule.shifts.size(); ++s) {
                angles[j][a] = base + rule.shifts[s];
                StateVector st = prefix[j];
                st.apply(g.kind, g.qubits, angles[j]);
                const auto o = finish(circuit, angles, std::move(st), j + 1);
                double dot = 0.0;
                for (std::size_t k = 0; k < o.size(); ++k) {
                    dot += dl_do[k] * o[k];
                }
                d += rule.coeffs[s] * dot;
            }
            angles[j][a] = base;
            grad[g.params[a].index] += d;
        }
    }
    return cross_entropy(probs, sample.label);
}

double mean_loss(const Circuit &circuit, const ParameterVector &params,
                 std::span<const Sample> batch) {
    double total = 0.0;
    for (const auto &s : batch) {
        total += cross_entropy(forward(circuit, params, s), s.label);
    }
    return total / static_cast<double>(batch.size());
}

} // namespace

std::vector<double> forward(const Circuit &circuit, const ParameterVector &params,
                            const Sample &sample) {
    check_label(circuit, sample);
    StateVector s = encoded_state(circuit, sample);
    for (const auto &g : circuit.layers) {
        s.apply(g.kind, g.qubits, resolve_params(g, params));
    }
    return softmax(measure_outputs(s, circuit.measurement));
}

int predict(const Circuit &circuit, const ParameterVector &params, const Sample &sample) {
    return argmax(forward(circuit, params, sample));
}

Metrics loss_and_accuracy(const Circuit &circuit, const ParameterVector &params,
                          std::span<const Sample> samples) {
    if (samples.empty()) {
        throw DataError("loss_and_accuracy on an empty set");
    }
    double loss = 0.0;
    std::size_t correct = 0;
    for (const auto &s : samples) {
        const auto p = forward(circuit, params, s);
        loss += cross_entropy(p, s.label);
        correct += argmax(p) == s.label ? 1 : 0;
    }
    const auto n = static_cast<double>(samples.size());
    return {loss / n, static_cast<double>(correct) / n};
}

std::vector<double> param_shift_gradient(const Circuit &circuit, const ParameterVector &params,
                                         std::span<const Sample> batch) {
    if (batch.empty()) {
        throw DataError("gradient of an empty batch");
    }
    std::vector<double> grad(params.size(), 0.0);
    auto angles = resolve_layers(circuit, params);
    for (const auto &s : batch) {
        accumulate_sample(circuit, angles, s, grad);
    }
    for (auto &g : grad) {
        g /= static_cast<double>(batch.size());
    }
    return grad;
}

std::vector<double> finite_difference_gradient(const Circuit &circuit,
                                               const ParameterVector &params,
                                               std::span<const Sample> batch, double h) {
    if (batch.empty()) {
        throw DataError("gradient of an empty batch");
    }
    std::vector<double> grad(params.size(), 0.0);
    std::vector<double> raw(params.values().begin(), params.values().end());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto plus = raw;
        auto minus = raw;
        plus[i] += h;
        minus[i] -= h;
        const double fp = mean_loss(circuit, ParameterVector(plus), batch);
        const double fm = mean_loss(circuit, ParameterVector(minus), batch);
        grad[i] = (fp - fm) / (2.0 * h);
    }
    return grad;
}

TrainResult sgd_train(const Circuit &circuit, const ParameterVector &params0,
                      std::span<const Sample> train, const TrainConfig &config,
                      const TrainOptions &options) {
    config.validate();
    if (train.empty()) {
        throw DataError("training set is empty");
    }
    const std::size_t n = params0.size();
    if (options.proximal &&
        (options.proximal->z.size() != n || options.proximal->lambda.size() != n)) {
        throw SpecError("proximal vectors do not match the parameter count");
    }
    if (options.proximal && !(options.proximal->rho > 0.0)) {
        throw ConfigError("proximal rho must be positive");
    }
    if (!options.frozen.empty() && options.frozen.size() != n) {
        throw SpecError("frozen mask does not match the parameter count");
    }
    const auto is_frozen = [&](std::size_t i) {
        return !options.frozen.empty() && options.frozen[i];
    };

    TrainResult result{params0, {}};
    ParameterVector &params = result.params;
    std::mt19937_64 rng(config.seed);
    std::vector<std::size_t> order(train.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> velocity(n, 0.0);
    std::vector<Sample> batch;

    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        std::shuffle(order.begin(), order.end(), rng);
        double epoch_loss = 0.0;
        std::size_t n_batches = 0;
        for (std::size_t b = 0; b < order.size(); b += config.batch_size) {
            const std::size_t e = std::min(order.size(), b + config.batch_size);
            std::vector<double> grad(n, 0.0);
            auto angles = resolve_layers(circuit, params);
            double loss = 0.0;
            for (std::size_t k = b; k < e; ++k) {
                loss += accumulate_sample(circuit, angles, train[order[k]], grad);
            }
            const auto bs = static_cast<double>(e - b);
            epoch_loss += loss / bs;
            ++n_batches;
            for (std::size_t i = 0; i < n; ++i) {
                if (is_frozen(i)) {
                    continue;
                }
                velocity[i] = config.momentum * velocity[i] + grad[i] / bs;
                double next = params[i] - config.learning_rate * velocity[i];
                if (options.proximal) {
                    // Implicit step on the quadratic term: stable for any rho.
                    const auto &p = *options.proximal;
                    const double target = p.z[i] - p.lambda[i] / p.rho;
                    const double k = config.learning_rate * p.rho;
                    next += k / (1.0 + k) * circular_residual(target, next);
                }
                params.set(i, next);
            }
        }
        result.epoch_loss.push_back(epoch_loss / static_cast<double>(n_batches));
    }
    return result;
}

double noisy_accuracy(const Circuit &circuit, const ParameterVector &params,
                      std::span<const Sample> samples, const BasisGateSet &basis,
                      const NoiseModel &noise, std::uint64_t seed) {
    if (samples.empty()) {
        throw DataError("noisy_accuracy on an empty set");
    }
    std::size_t correct = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto &s = samples[i];
        check_label(circuit, s);
        const auto physical = transpile_full(circuit, params, s.features, basis);
        const auto out = noisy_outputs(physical, initial_state(circuit, s.features),
                                       circuit.measurement, noise, seed + i);
        correct += argmax(out) == s.label ? 1 : 0;
    }
    return static_cast<double>(correct) / static_cast<double>(samples.size());
}

} // namespace qcompress
