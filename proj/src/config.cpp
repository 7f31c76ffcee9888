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
#include "qcompress/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "qcompress/circuit_io.hpp"
#include "qcompress/errors.hpp"

namespace qcompress {

namespace {

constexpr Method kAllMethods[] = {Method::Vanilla, Method::ZeroOnlyPruning, Method::PruneOnly,
                                  Method::QuantOnly, Method::CompVQC};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
    throw ConfigError("invalid value '" + std::string(value) + "' for key '" + std::string(key) +
                      "'");
}

double to_double(std::string_view key, std::string_view value) {
    double out = 0.0;
    const auto *end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        bad_value(key, value);
    }
    return out;
}

template <typename Int> Int to_int(std::string_view key, std::string_view value) {
    Int out{};
    const auto *end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        bad_value(key, value);
    }
    return out;
}

bool to_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1" || value == "yes") {
        return true;
    }
    if (value == "false" || value == "0" || value == "no") {
        return false;
    }
    bad_value(key, value);
}

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string_view estimator_name(NoiseModel::Estimator e) {
    return e == NoiseModel::Estimator::Sampled ? "sampled" : "trajectory-mean";
}

} // namespace

std::string_view method_name(Method m) noexcept {
    switch (m) {
    case Method::Vanilla:
        return "vanilla";
    case Method::ZeroOnlyPruning:
        return "zero-only-pruning";
    case Method::PruneOnly:
        return "prune-only";
    case Method::QuantOnly:
        return "quant-only";
    case Method::CompVQC:
        return "compvqc";
    }
    return "unknown";
}

Method parse_method(std::string_view name) {
    for (Method m : kAllMethods) {
        if (method_name(m) == name) {
            return m;
        }
    }
    throw ConfigError("unknown method '" + std::string(name) + "'");
}

std::vector<Method> parse_methods(std::string_view list) {
    list = trim(list);
    if (list == "all") {
        return {std::begin(kAllMethods), std::end(kAllMethods)};
    }
    std::vector<Method> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        auto end = list.find(',', start);
        if (end == std::string_view::npos) {
            end = list.size();
        }
        const auto name = trim(list.substr(start, end - start));
        if (!name.empty()) {
            out.push_back(parse_method(name));
        }
        start = end + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) {
        throw ConfigError("method list is empty");
    }
    return out;
}

void ExperimentConfig::validate() const {
    if (dataset != "syn4" && dataset != "syn16" && dataset != "csv") {
        throw ConfigError("dataset must be syn4, syn16 or csv");
    }
    if (dataset == "csv") {
        if (data_csv.empty()) {
            throw ConfigError("dataset csv needs data_csv");
        }
        if (!std::filesystem::exists(data_csv)) {
            throw ConfigError("data file not found: " + data_csv.string());
        }
    } else if (n_samples < 10) {
        throw ConfigError("n_samples must be at least 10");
    }
    if (n_classes < 2) {
        throw ConfigError("n_classes must be at least 2");
    }
    if (circuit != "syn4" && circuit != "syn16" && !std::filesystem::exists(circuit)) {
        throw ConfigError("circuit file not found: " + circuit);
    }
    if (methods.empty()) {
        throw ConfigError("no methods selected");
    }
    if (noise_p && !(*noise_p >= 0.0 && *noise_p <= 1.0)) {
        throw ConfigError("noise_p must lie in [0, 1]");
    }
    if (shots == 0) {
        throw ConfigError("shots must be positive");
    }
    train.validate();
    admm.validate();
}

std::vector<std::pair<std::string, std::string>> parse_key_values(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++line_no;
        const auto line = trim(text.substr(start, end - start));
        start = end + 1;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(line_no, "expected key = value");
        }
        const auto key = trim(line.substr(0, eq));
        if (key.empty()) {
            throw ParseError(line_no, "empty key");
        }
        out.emplace_back(std::string(key), std::string(trim(line.substr(eq + 1))));
    }
    return out;
}

void apply_setting(ExperimentConfig &c, std::string_view key, std::string_view value) {
    value = trim(value);
    if (key == "dataset") {
        c.dataset = std::string(value);
    } else if (key == "n_samples") {
        c.n_samples = to_int<std::size_t>(key, value);
    } else if (key == "data_csv") {
        c.data_csv = std::string(value);
    } else if (key == "n_classes") {
        c.n_classes = to_int<int>(key, value);
    } else if (key == "pool_28x28") {
        c.pool_28x28 = to_bool(key, value);
    } else if (key == "circuit") {
        c.circuit = std::string(value);
    } else if (key == "basis") {
        try {
            c.basis = BasisGateSet::parse(value);
        } catch (const SpecError &e) {
            throw ConfigError(e.what());
        }
    } else if (key == "seed") {
        c.seed = to_int<std::uint64_t>(key, value);
        c.train.seed = c.seed;
    } else if (key == "learning_rate") {
        c.train.learning_rate = to_double(key, value);
    } else if (key == "epochs") {
        c.train.epochs = to_int<int>(key, value);
    } else if (key == "batch_size") {
        c.train.batch_size = to_int<std::size_t>(key, value);
    } else if (key == "momentum") {
        c.train.momentum = to_double(key, value);
    } else if (key == "init") {
        if (value == "uniform") {
            c.train.init = InitScheme::Uniform2Pi;
        } else if (value == "zero") {
            c.train.init = InitScheme::Zero;
        } else {
            bad_value(key, value);
        }
    } else if (key == "rho") {
        c.admm.rho = to_double(key, value);
    } else if (key == "alpha") {
        c.admm.alpha = to_double(key, value);
    } else if (key == "ratio") {
        c.admm.target_ratio = to_double(key, value);
    } else if (key == "zeta") {
        c.admm.zeta = to_double(key, value);
    } else if (key == "max_iters") {
        c.admm.max_iters = to_int<int>(key, value);
    } else if (key == "epochs_per_iter") {
        c.admm.epochs_per_iter = to_int<int>(key, value);
    } else if (key == "retrain_epochs") {
        c.admm.retrain_epochs = to_int<int>(key, value);
    } else if (key == "scaled_lambda_distance") {
        c.admm.scaled_lambda_distance = to_bool(key, value);
    } else if (key == "tau") {
        if (value == "speedup") {
            c.admm.orientation = TauOrientation::Speedup;
        } else if (value == "ratio") {
            c.admm.orientation = TauOrientation::Ratio;
        } else {
            bad_value(key, value);
        }
    } else if (key == "methods") {
        c.methods = parse_methods(value);
    } else if (key == "noise_p") {
        if (value == "none") {
            c.noise_p.reset();
        } else {
            c.noise_p = to_double(key, value);
        }
    } else if (key == "shots") {
        c.shots = to_int<std::size_t>(key, value);
    } else if (key == "estimator") {
        if (value == "sampled") {
            c.estimator = NoiseModel::Estimator::Sampled;
        } else if (value == "trajectory-mean") {
            c.estimator = NoiseModel::Estimator::TrajectoryMean;
        } else {
            bad_value(key, value);
        }
    } else if (key == "output") {
        c.output = std::string(value);
    } else {
        throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
}

ExperimentConfig config_from_text(std::string_view text) {
    ExperimentConfig c;
    for (const auto &[k, v] : parse_key_values(text)) {
        apply_setting(c, k, v);
    }
    return c;
}

ExperimentConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read config " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return config_from_text(ss.str());
}

std::string canonical_config(const ExperimentConfig &c) {
    std::string methods;
    for (Method m : c.methods) {
        if (!methods.empty()) {
            methods += ',';
        }
        methods += method_name(m);
    }
    const std::pair<const char *, std::string> rows[] = {
        {"dataset", c.dataset},
        {"n_samples", std::to_string(c.n_samples)},
        {"data_csv", c.data_csv.string()},
        {"n_classes", std::to_string(c.n_classes)},
        {"pool_28x28", c.pool_28x28 ? "true" : "false"},
        {"circuit", c.circuit},
        {"basis", c.basis.to_string()},
        {"seed", std::to_string(c.seed)},
        {"learning_rate", fmt_double(c.train.learning_rate)},
        {"epochs", std::to_string(c.train.epochs)},
        {"batch_size", std::to_string(c.train.batch_size)},
        {"momentum", fmt_double(c.train.momentum)},
        {"init", c.train.init == InitScheme::Zero ? "zero" : "uniform"},
        {"rho", fmt_double(c.admm.rho)},
        {"alpha", fmt_double(c.admm.alpha)},
        {"ratio", fmt_double(c.admm.target_ratio)},
        {"zeta", fmt_double(c.admm.zeta)},
        {"max_iters", std::to_string(c.admm.max_iters)},
        {"epochs_per_iter", std::to_string(c.admm.epochs_per_iter)},
        {"retrain_epochs", std::to_string(c.admm.retrain_epochs)},
        {"scaled_lambda_distance", c.admm.scaled_lambda_distance ? "true" : "false"},
        {"tau", c.admm.orientation == TauOrientation::Speedup ? "speedup" : "ratio"},
        {"methods", methods},
        {"noise_p", c.noise_p ? fmt_double(*c.noise_p) : "none"},
        {"shots", std::to_string(c.shots)},
        {"estimator", std::string(estimator_name(c.estimator))},
        {"output", c.output.string()},
    };
    std::string out;
    for (const auto &[k, v] : rows) {
        out += k;
        out += " = ";
        out += v;
        out += '\n';
    }
    return out;
}

std::uint64_t config_hash(const ExperimentConfig &config) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : canonical_config(config)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Circuit resolve_circuit(const ExperimentConfig &config) {
    if (config.circuit == "syn4" || config.circuit == "syn16") {
        return reference_circuit(config.circuit);
    }
    return load_circuit(config.circuit);
}

Dataset resolve_dataset(const ExperimentConfig &config) {
    if (config.dataset == "syn4") {
        return generate_synthetic(4, config.n_samples, config.seed);
    }
    if (config.dataset == "syn16") {
        return generate_synthetic(16, config.n_samples, config.seed);
    }
    if (config.dataset == "csv") {
        return load_csv(config.data_csv, config.n_classes, config.seed, config.pool_28x28);
    }
    throw ConfigError("unknown dataset '" + config.dataset + "'");
}

} // namespace qcompress
