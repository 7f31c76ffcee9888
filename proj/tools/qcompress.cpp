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
// qcompress command-line driver. Exit codes: 0 success, 2 configuration
// error, 3 runtime error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcompress/circuit_io.hpp"
#include "qcompress/config.hpp"
#include "qcompress/errors.hpp"
#include "qcompress/experiment.hpp"
#include "qcompress/lut.hpp"
#include "qcompress/recl.hpp"
#include "qcompress/report.hpp"
#include "qcompress/transpiler.hpp"

namespace {

using namespace qcompress;

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

// Raised while turning flags into an ExperimentConfig.
struct ConfigStageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flags shared by every subcommand that builds an ExperimentConfig. Each
// named flag is sugar for `--set key=value` and wins over the config file.
struct CommonFlags {
    std::string config_path;
    std::vector<std::string> sets;
    std::map<std::string, std::string> named;

    void attach(CLI::App *app) {
        app->add_option("-c,--config", config_path, "key = value config file");
        app->add_option("--set", sets, "Override one config key (key=value)");
        const std::pair<const char *, const char *> keys[] = {
            {"--seed", "seed"},       {"--circuit", "circuit"},
            {"--dataset", "dataset"}, {"--data-csv", "data_csv"},
            {"--basis", "basis"},     {"--epochs", "epochs"},
            {"--lr", "learning_rate"}, {"--rho", "rho"},
            {"--alpha", "alpha"},     {"--ratio", "ratio"},
            {"--zeta", "zeta"},       {"--max-iters", "max_iters"},
            {"--methods", "methods"}, {"--noise", "noise_p"},
            {"--shots", "shots"},     {"--output", "output"},
        };
        for (const auto &[flag, key] : keys) {
            app->add_option_function<std::string>(
                flag, [this, k = std::string(key)](const std::string &v) { named[k] = v; },
                "Config key '" + std::string(key) + "'");
        }
    }

    ExperimentConfig build() const {
        try {
            ExperimentConfig cfg = config_path.empty() ? ExperimentConfig{} : load_config(config_path);
            for (const auto &s : sets) {
                const auto eq = s.find('=');
                if (eq == std::string::npos) {
                    throw ConfigError("--set expects key=value, got '" + s + "'");
                }
                apply_setting(cfg, s.substr(0, eq), s.substr(eq + 1));
            }
            for (const auto &[k, v] : named) {
                apply_setting(cfg, k, v);
            }
            cfg.validate();
            return cfg;
        } catch (const Error &e) {
            throw ConfigStageError(e.what());
        }
    }
};

// Writes to `path`, or stdout when empty.
void write_text(const std::filesystem::path &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) {
        throw IoError("cannot write " + path.string());
    }
}

ParameterVector vanilla_params(const ExperimentConfig &cfg, const Circuit &circuit,
                               const Dataset &data) {
    TrainConfig tc = cfg.train;
    tc.seed = cfg.seed;
    return sgd_train(circuit, init_params(circuit, cfg.seed, tc.init), data.train, tc).params;
}

void log_line(std::string_view msg) { std::cerr << "[qcompress] " << msg << '\n'; }

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Compilation-aware compression of variational quantum circuits"};
    app.require_subcommand(1);

    CommonFlags train_flags;
    std::string train_params_out;
    auto *train = app.add_subcommand("train", "Train the uncompressed circuit");
    train_flags.attach(train);
    train->add_option("--params-out", train_params_out, "Write trained parameters here");

    std::string depth_basis = "CX,ID,RZ,SX,X";
    std::string depth_out;
    auto *depth = app.add_subcommand("depth", "Standalone gate depth table (CSV)");
    depth->add_option("--basis", depth_basis, "Comma-separated basis gates")
        ->capture_default_str();
    depth->add_option("--out", depth_out, "Output file (default stdout)");

    CommonFlags lut_flags;
    std::string lut_out;
    auto *lut_cmd = app.add_subcommand("lut", "Compression-level LUT for a circuit (CSV)");
    lut_flags.attach(lut_cmd);
    lut_cmd->add_option("--out", lut_out, "Output file (default stdout)");

    CommonFlags recl_flags;
    std::string recl_params;
    std::string recl_out;
    auto *recl = app.add_subcommand("recl", "Per-gate reconstructed LUT (CSV)");
    recl_flags.attach(recl);
    recl->add_option("--params", recl_params, "Trained parameters (default: train first)");
    recl->add_option("--out", recl_out, "Output file (default stdout)");

    CommonFlags compress_flags;
    std::string compress_format = "table";
    auto *compress = app.add_subcommand("compress", "Run the methods and emit a report");
    compress_flags.attach(compress);
    compress->add_option("--format", compress_format, "table, csv or json")
        ->capture_default_str();

    std::string report_in;
    std::string report_format = "table";
    std::string report_out;
    auto *report = app.add_subcommand("report", "Re-emit a CSV report in another format");
    report->add_option("input", report_in, "CSV report")->required();
    report->add_option("--format", report_format, "table, csv or json")->capture_default_str();
    report->add_option("--out", report_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        if (*train) {
            const auto cfg = train_flags.build();
            const auto circuit = resolve_circuit(cfg);
            const auto data = resolve_dataset(cfg);
            const auto params = vanilla_params(cfg, circuit, data);
            const auto tr = loss_and_accuracy(circuit, params, data.train);
            const auto te = loss_and_accuracy(circuit, params, data.test);
            std::printf("train_loss %.6f\ntrain_accuracy %.4f\ntest_accuracy %.4f\ntcd %d\n",
                        tr.loss, tr.accuracy, te.accuracy,
                        circuit_tcd(circuit, params, cfg.basis));
            if (!train_params_out.empty()) {
                write_params(train_params_out, params);
            }
        } else if (*depth) {
            BasisGateSet basis;
            try {
                basis = BasisGateSet::parse(depth_basis);
            } catch (const Error &e) {
                throw ConfigStageError(e.what());
            }
            std::ostringstream ss;
            DepthTable::build(basis).write_csv(ss);
            write_text(depth_out, ss.str());
        } else if (*lut_cmd) {
            const auto cfg = lut_flags.build();
            std::ostringstream ss;
            build_lut(resolve_circuit(cfg), cfg.basis).write_csv(ss);
            write_text(lut_out, ss.str());
        } else if (*recl) {
            const auto cfg = recl_flags.build();
            const auto circuit = resolve_circuit(cfg);
            const auto data = resolve_dataset(cfg);
            const auto params =
                recl_params.empty() ? vanilla_params(cfg, circuit, data) : read_params(recl_params);
            const auto table = reconstruct_lut(circuit, params, build_lut(circuit, cfg.basis),
                                               data.train, cfg.basis, cfg.admm.orientation);
            std::ostringstream ss;
            table.write_csv(ss);
            write_text(recl_out, ss.str());
        } else if (*compress) {
            const auto cfg = compress_flags.build();
            ReportFormat fmt;
            try {
                fmt = parse_report_format(compress_format);
            } catch (const Error &e) {
                throw ConfigStageError(e.what());
            }
            const auto result = run_experiment(cfg, log_line);
            write_text(cfg.output, format_report(result.report, fmt));
        } else if (*report) {
            ReportFormat fmt;
            try {
                fmt = parse_report_format(report_format);
            } catch (const Error &e) {
                throw ConfigStageError(e.what());
            }
            std::ifstream in(report_in);
            if (!in) {
                throw IoError("cannot read " + report_in);
            }
            std::ostringstream ss;
            ss << in.rdbuf();
            write_text(report_out, format_report(parse_report_csv(ss.str()), fmt));
        }
    } catch (const ConfigStageError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}
