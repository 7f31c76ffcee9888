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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcompress/admm.hpp"
#include "qcompress/config.hpp"

namespace qcompress {

struct MethodRow {
    Method method = Method::Vanilla;
    double accuracy = 0.0;       // test split
    double train_accuracy = 0.0;
    double accuracy_delta = 0.0; // accuracy - vanilla accuracy
    int tcd = 0;
    double speedup = 1.0;        // vanilla TCD / tcd
    double metric = 0.0;         // accuracy * speedup
    std::optional<double> noisy_accuracy;
    int iterations = 0;
    bool converged = true;
    std::size_t masked = 0;

    friend bool operator==(const MethodRow &, const MethodRow &) = default;
};

struct MethodTrace {
    Method method = Method::Vanilla;
    std::vector<IterationRecord> iterations;

    friend bool operator==(const MethodTrace &, const MethodTrace &) = default;
};

struct Report {
    std::string circuit;
    std::string dataset;
    std::uint64_t seed = 0;
    std::uint64_t config_hash = 0;
    std::vector<MethodRow> rows; // rows[0] is Vanilla
    std::vector<MethodTrace> traces;

    friend bool operator==(const Report &, const Report &) = default;
};

/// Output of run_experiment besides the report: the trained parameters per
/// method, in row order.
struct ExperimentArtifacts {
    Report report;
    std::vector<ParameterVector> params;
};

using ProgressFn = std::function<void(std::string_view)>;

/// Trains the vanilla warm start and runs the requested methods in Method
/// order, all from that warm start. The Vanilla row is always present.
/// Errors are rethrown with the failing method's name prefixed.
ExperimentArtifacts run_experiment(const ExperimentConfig &config,
                                   const ProgressFn &progress = {});

/// Fills accuracy_delta, speedup and metric from the raw columns.
void finalize_rows(std::vector<MethodRow> &rows);

/// One value per line, %.17g.
void write_params(const std::filesystem::path &path, const ParameterVector &params);
ParameterVector read_params(const std::filesystem::path &path);

} // namespace qcompress
