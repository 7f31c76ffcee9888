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
#include "qcompress/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qcompress/errors.hpp"
#include "qcompress/lut.hpp"

namespace qcompress {

namespace {

template <typename Fn> auto with_context(Method m, Fn &&fn) -> decltype(fn()) {
    const std::string prefix = std::string(method_name(m)) + ": ";
    try {
        return fn();
    } catch (const ConfigError &e) {
        throw ConfigError(prefix + e.what());
    } catch (const Error &e) {
        throw Error(prefix + e.what());
    }
}

std::optional<BaselineMode> baseline_of(Method m) {
    switch (m) {
    case Method::ZeroOnlyPruning:
        return BaselineMode::ZeroOnlyPruning;
    case Method::PruneOnly:
        return BaselineMode::PruneOnly;
    case Method::QuantOnly:
        return BaselineMode::QuantOnly;
    default:
        return std::nullopt;
    }
}

} // namespace

void finalize_rows(std::vector<MethodRow> &rows) {
    if (rows.empty()) {
        return;
    }
    const double base_acc = rows.front().accuracy;
    const int base_tcd = rows.front().tcd;
    for (auto &r : rows) {
        r.accuracy_delta = r.accuracy - base_acc;
        r.speedup = r.tcd > 0 ? static_cast<double>(base_tcd) / r.tcd
                              : static_cast<double>(base_tcd);
        r.metric = r.accuracy * r.speedup;
    }
}

ExperimentArtifacts run_experiment(const ExperimentConfig &config, const ProgressFn &progress) {
    config.validate();
    auto say = [&](const std::string &msg) {
        if (progress) {
            progress(msg);
        }
    };

    const Circuit circuit = resolve_circuit(config);
    const Dataset data = resolve_dataset(config);
    TrainConfig train_cfg = config.train;
    train_cfg.seed = config.seed;

    std::optional<NoiseModel> noise;
    if (config.noise_p) {
        noise = NoiseModel{*config.noise_p, config.shots, config.estimator};
    }

    ExperimentArtifacts out;
    Report &report = out.report;
    report.circuit = config.circuit;
    report.dataset = config.dataset;
    report.seed = config.seed;
    report.config_hash = config_hash(config);

    auto make_row = [&](Method m, const ParameterVector &p) {
        MethodRow row;
        row.method = m;
        row.accuracy = loss_and_accuracy(circuit, p, data.test).accuracy;
        row.train_accuracy = loss_and_accuracy(circuit, p, data.train).accuracy;
        row.tcd = circuit_tcd(circuit, p, config.basis);
        if (noise) {
            row.noisy_accuracy =
                noisy_accuracy(circuit, p, data.test, config.basis, *noise, config.seed);
        }
        return row;
    };

    say("training vanilla");
    const ParameterVector warm = with_context(Method::Vanilla, [&] {
        const auto p0 = init_params(circuit, config.seed, train_cfg.init);
        return sgd_train(circuit, p0, data.train, train_cfg).params;
    });
    report.rows.push_back(with_context(Method::Vanilla, [&] { return make_row(Method::Vanilla, warm); }));
    out.params.push_back(warm);

    const bool needs_lut = std::any_of(config.methods.begin(), config.methods.end(),
                                       [](Method m) { return m != Method::Vanilla; });
    if (needs_lut) {
        const CompressionLUT lut = build_lut(circuit, config.basis);
        for (Method m : config.methods) {
            if (m == Method::Vanilla) {
                continue;
            }
            say("running " + std::string(method_name(m)));
            with_context(m, [&] {
                const auto mode = baseline_of(m);
                const CompressionResult res =
                    mode ? baseline_compress(*mode, circuit, data.train, lut, config.basis, warm,
                                             config.admm, train_cfg)
                         : run_cqcp_admm(circuit, data.train, lut, config.basis, warm,
                                         config.admm, train_cfg);
                MethodRow row = make_row(m, res.params);
                row.iterations = res.iterations;
                row.converged = res.converged;
                row.masked = res.mask.count();
                report.rows.push_back(row);
                report.traces.push_back({m, res.trace});
                out.params.push_back(res.params);
            });
        }
    }
    finalize_rows(report.rows);
    return out;
}

void write_params(const std::filesystem::path &path, const ParameterVector &params) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    char buf[32];
    for (double v : params.values()) {
        std::snprintf(buf, sizeof buf, "%.17g\n", v);
        out << buf;
    }
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

ParameterVector read_params(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read " + path.string());
    }
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(line, &used);
        } catch (const std::exception &) {
            throw ParseError(line_no, "expected a number");
        }
        if (used != line.size()) {
            throw ParseError(line_no, "trailing characters");
        }
        values.push_back(v);
    }
    return ParameterVector(std::move(values));
}

} // namespace qcompress
