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

// Experiment configuration: a flat `key = value` text format. Blank lines and
// lines starting with '#' are ignored. Keys are documented in docs/cli.md.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcompress/admm.hpp"
#include "qcompress/circuit.hpp"
#include "qcompress/dataset.hpp"
#include "qcompress/noise.hpp"
#include "qcompress/trainer.hpp"
#include "qcompress/transpiler.hpp"

namespace qcompress {

/// Methods in the order run_experiment executes them.
enum class Method { Vanilla, ZeroOnlyPruning, PruneOnly, QuantOnly, CompVQC };

std::string_view method_name(Method m) noexcept;
/// Accepts the names returned by method_name. Throws ConfigError otherwise.
Method parse_method(std::string_view name);
/// Comma-separated list, or "all". Result is sorted and deduplicated.
std::vector<Method> parse_methods(std::string_view list);

struct ExperimentConfig {
    /// "syn4", "syn16" or "csv".
    std::string dataset = "syn4";
    std::size_t n_samples = 100;
    std::filesystem::path data_csv;
    int n_classes = 2;
    bool pool_28x28 = false;

    /// A reference name ("syn4", "syn16") or a path to a circuit file.
    std::string circuit = "syn4";

    BasisGateSet basis;
    TrainConfig train;
    AdmmConfig admm;
    std::vector<Method> methods{Method::Vanilla, Method::ZeroOnlyPruning, Method::PruneOnly,
                                Method::QuantOnly, Method::CompVQC};

    std::optional<double> noise_p;
    std::size_t shots = 4096;
    NoiseModel::Estimator estimator = NoiseModel::Estimator::Sampled;

    std::filesystem::path output;
    std::uint64_t seed = 0;

    /// Range checks plus existence of referenced files. Throws ConfigError.
    void validate() const;
};

/// Ordered key/value pairs. Throws ParseError on a line without '='.
std::vector<std::pair<std::string, std::string>> parse_key_values(std::string_view text);

/// Applies one setting. Throws ConfigError for an unknown key or a value
/// that does not parse.
void apply_setting(ExperimentConfig &config, std::string_view key, std::string_view value);

ExperimentConfig config_from_text(std::string_view text);
/// Throws IoError if the file cannot be read.
ExperimentConfig load_config(const std::filesystem::path &path);

/// Every key with its effective value, one per line, in a fixed order.
/// config_from_text(canonical_config(c)) reproduces c.
std::string canonical_config(const ExperimentConfig &config);

/// 64-bit FNV-1a of canonical_config().
std::uint64_t config_hash(const ExperimentConfig &config);

Circuit resolve_circuit(const ExperimentConfig &config);
Dataset resolve_dataset(const ExperimentConfig &config);

} // namespace qcompress
