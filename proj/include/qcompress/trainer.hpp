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
#include <optional>
#include <span>
#include <vector>

#include "qcompress/circuit.hpp"
#include "qcompress/dataset.hpp"
#include "qcompress/noise.hpp"
#include "qcompress/transpiler.hpp"

namespace qcompress {

enum class InitScheme { Uniform2Pi, Zero };

struct TrainConfig {
    double learning_rate = 0.05;
    int epochs = 200;
    std::size_t batch_size = 10;
    std::uint64_t seed = 0;
    InitScheme init = InitScheme::Uniform2Pi;
    double momentum = 0.0;

    /// Throws ConfigError on non-positive rate, epochs or batch size.
    void validate() const;
};

/// Seeded initial parameters (uniform in [0, 2π) by default).
ParameterVector init_params(const Circuit &circuit, std::uint64_t seed,
                            InitScheme scheme = InitScheme::Uniform2Pi);

/// Softmax of the measured outputs for one sample.
std::vector<double> forward(const Circuit &circuit, const ParameterVector &params,
                            const Sample &sample);

/// argmax of forward(); ties resolve to the lower class.
int predict(const Circuit &circuit, const ParameterVector &params, const Sample &sample);

struct Metrics {
    double loss = 0.0;     // mean cross-entropy
    double accuracy = 0.0; // fraction predicted correctly
};

/// Throws DataError on an empty set.
Metrics loss_and_accuracy(const Circuit &circuit, const ParameterVector &params,
                          std::span<const Sample> samples);

/// Gradient of the mean cross-entropy over `batch`. R* slots use the ±π/2
/// shift rule, CR* slots the four-term rule (shifts ±π/2, ±3π/2), U3/CU3
/// slots central differences.
std::vector<double> param_shift_gradient(const Circuit &circuit, const ParameterVector &params,
                                         std::span<const Sample> batch);

/// Central finite differences of the same loss.
std::vector<double> finite_difference_gradient(const Circuit &circuit,
                                               const ParameterVector &params,
                                               std::span<const Sample> batch, double h = 1e-5);

/// Quadratic pull towards Z: adds rho/2 * ||θ - Z + λ/rho||^2 to the loss,
/// with θ - Z taken as a circular residual.
struct Proximal {
    std::vector<double> z;
    std::vector<double> lambda;
    double rho = 0.0;
};

struct TrainOptions {
    std::optional<Proximal> proximal;
    /// Slots marked true keep their initial value.
    std::vector<bool> frozen;
};

struct TrainResult {
    ParameterVector params;
    /// Mean minibatch loss per epoch, measured before each update.
    std::vector<double> epoch_loss;
};

/// Minibatch SGD over `train`; deterministic for a given config seed.
TrainResult sgd_train(const Circuit &circuit, const ParameterVector &params0,
                      std::span<const Sample> train, const TrainConfig &config,
                      const TrainOptions &options = {});

/// Accuracy when every sample runs through the transpiled encoder and
/// layers under `noise`. Sample i uses seed + i.
double noisy_accuracy(const Circuit &circuit, const ParameterVector &params,
                      std::span<const Sample> samples, const BasisGateSet &basis,
                      const NoiseModel &noise, std::uint64_t seed);

} // namespace qcompress
