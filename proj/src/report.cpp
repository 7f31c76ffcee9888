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
#include "qcompress/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include "json.hpp"
#include "qcompress/errors.hpp"

namespace qcompress {

namespace {

constexpr std::string_view kRowHeader = "method,accuracy,train_accuracy,accuracy_delta,tcd,"
                                        "speedup,metric,noisy_accuracy,iterations,converged,"
                                        "masked";
constexpr std::string_view kTraceHeader =
    "trace,iter,loss,accuracy,tcd,theta_z_gap,dtheta_sq,dz_sq,masked";

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void check(const Report &r) {
    if (r.rows.empty()) {
        throw SpecError("report has no rows");
    }
    if (r.rows.front().method != Method::Vanilla) {
        throw SpecError("first report row must be vanilla");
    }
}

std::string format_csv(const Report &r) {
    std::ostringstream out;
    out << "# circuit," << r.circuit << '\n'
        << "# dataset," << r.dataset << '\n'
        << "# seed," << r.seed << '\n'
        << "# config_hash," << r.config_hash << '\n'
        << kRowHeader << '\n';
    for (const auto &row : r.rows) {
        out << method_name(row.method) << ',' << num(row.accuracy) << ','
            << num(row.train_accuracy) << ',' << num(row.accuracy_delta) << ',' << row.tcd << ','
            << num(row.speedup) << ',' << num(row.metric) << ','
            << (row.noisy_accuracy ? num(*row.noisy_accuracy) : "") << ',' << row.iterations
            << ',' << (row.converged ? 1 : 0) << ',' << row.masked << '\n';
    }
    out << '\n' << kTraceHeader << '\n';
    for (const auto &t : r.traces) {
        for (const auto &it : t.iterations) {
            out << method_name(t.method) << ',' << it.iter << ',' << num(it.loss) << ','
                << num(it.accuracy) << ',' << it.tcd << ',' << num(it.theta_z_gap) << ','
                << num(it.dtheta_sq) << ',' << num(it.dz_sq) << ',' << it.masked << '\n';
        }
    }
    return out.str();
}

std::string format_table(const Report &r) {
    const bool noisy = r.rows.front().noisy_accuracy.has_value();
    std::ostringstream out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "circuit %s  dataset %s  seed %llu  config %016llx\n",
                  r.circuit.c_str(), r.dataset.c_str(), static_cast<unsigned long long>(r.seed),
                  static_cast<unsigned long long>(r.config_hash));
    out << buf;
    std::snprintf(buf, sizeof buf, "%-18s | %-20s | %-14s | %-7s%s\n", "Method",
                  "Acc. (vs. Baseline)", "TCD (Speedup)", "Metric",
                  noisy ? " | Noisy Acc." : "");
    out << buf;
    out << std::string(70 + (noisy ? 13 : 0), '-') << '\n';
    for (const auto &row : r.rows) {
        char acc[64];
        char tcd[64];
        std::snprintf(acc, sizeof acc, "%.2f%% (%+.2f%%)", 100.0 * row.accuracy,
                      100.0 * row.accuracy_delta);
        std::snprintf(tcd, sizeof tcd, "%d (%.2fx)", row.tcd, row.speedup);
        std::snprintf(buf, sizeof buf, "%-18s | %-20s | %-14s | %-7.3f",
                      std::string(method_name(row.method)).c_str(), acc, tcd, row.metric);
        out << buf;
        if (noisy) {
            std::snprintf(buf, sizeof buf, " | %.2f%%", 100.0 * row.noisy_accuracy.value_or(0));
            out << buf;
        }
        out << '\n';
    }
    for (const auto &row : r.rows) {
        if (row.method != Method::Vanilla && !row.converged) {
            out << "warning: " << method_name(row.method) << " stopped at max_iters without"
                << " meeting the stopping rule\n";
        }
    }
    return out.str();
}

std::string format_json(const Report &r) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["circuit"] = r.circuit;
    j["dataset"] = r.dataset;
    j["seed"] = r.seed;
    j["config_hash"] = r.config_hash;
    j["rows"] = ordered_json::array();
    for (const auto &row : r.rows) {
        ordered_json o;
        o["method"] = method_name(row.method);
        o["accuracy"] = row.accuracy;
        o["train_accuracy"] = row.train_accuracy;
        o["accuracy_delta"] = row.accuracy_delta;
        o["tcd"] = row.tcd;
        o["speedup"] = row.speedup;
        o["metric"] = row.metric;
        o["noisy_accuracy"] =
            row.noisy_accuracy ? ordered_json(*row.noisy_accuracy) : ordered_json(nullptr);
        o["iterations"] = row.iterations;
        o["converged"] = row.converged;
        o["masked"] = row.masked;
        j["rows"].push_back(o);
    }
    j["traces"] = ordered_json::array();
    for (const auto &t : r.traces) {
        ordered_json o;
        o["method"] = method_name(t.method);
        o["iterations"] = ordered_json::array();
        for (const auto &it : t.iterations) {
            o["iterations"].push_back({{"iter", it.iter},
                                       {"loss", it.loss},
                                       {"accuracy", it.accuracy},
                                       {"tcd", it.tcd},
                                       {"theta_z_gap", it.theta_z_gap},
                                       {"dtheta_sq", it.dtheta_sq},
                                       {"dz_sq", it.dz_sq},
                                       {"masked", it.masked}});
        }
        j["traces"].push_back(o);
    }
    return j.dump(2) + "\n";
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto end = line.find(',', start);
        if (end == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, end - start));
        start = end + 1;
    }
}

struct FieldReader {
    std::size_t line;

    double real(std::string_view s) const {
        double v = 0.0;
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size()) {
            throw ParseError(line, "bad number '" + std::string(s) + "'");
        }
        return v;
    }

    template <typename Int> Int integer(std::string_view s) const {
        Int v{};
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size()) {
            throw ParseError(line, "bad integer '" + std::string(s) + "'");
        }
        return v;
    }

    Method method(std::string_view s) const {
        try {
            return parse_method(s);
        } catch (const ConfigError &e) {
            throw ParseError(line, e.what());
        }
    }
};

} // namespace

ReportFormat parse_report_format(std::string_view name) {
    if (name == "table") {
        return ReportFormat::Table;
    }
    if (name == "csv") {
        return ReportFormat::Csv;
    }
    if (name == "json") {
        return ReportFormat::Json;
    }
    throw ConfigError("unknown report format '" + std::string(name) + "'");
}

std::string format_report(const Report &report, ReportFormat format) {
    check(report);
    switch (format) {
    case ReportFormat::Table:
        return format_table(report);
    case ReportFormat::Csv:
        return format_csv(report);
    case ReportFormat::Json:
        return format_json(report);
    }
    throw SpecError("unknown report format");
}

void emit_report(const Report &report, ReportFormat format, const std::filesystem::path &path) {
    const std::string text = format_report(report, format);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write report to " + path.string());
    }
    out << text;
    if (!out.flush()) {
        throw IoError("write failed: " + path.string());
    }
}

Report parse_report_csv(std::string_view text) {
    Report r;
    enum class Section { Stamp, Rows, Traces } section = Section::Stamp;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        const FieldReader rd{line_no};
        if (line.empty()) {
            continue;
        }
        if (line.starts_with("# ")) {
            const auto f = split(line.substr(2));
            if (f.size() != 2) {
                throw ParseError(line_no, "malformed stamp line");
            }
            if (f[0] == "circuit") {
                r.circuit = std::string(f[1]);
            } else if (f[0] == "dataset") {
                r.dataset = std::string(f[1]);
            } else if (f[0] == "seed") {
                r.seed = rd.integer<std::uint64_t>(f[1]);
            } else if (f[0] == "config_hash") {
                r.config_hash = rd.integer<std::uint64_t>(f[1]);
            } else {
                throw ParseError(line_no, "unknown stamp '" + std::string(f[0]) + "'");
            }
            continue;
        }
        if (line == kRowHeader) {
            section = Section::Rows;
            continue;
        }
        if (line == kTraceHeader) {
            section = Section::Traces;
            for (const auto &row : r.rows) {
                if (row.method != Method::Vanilla) {
                    r.traces.push_back({row.method, {}});
                }
            }
            continue;
        }
        const auto f = split(line);
        if (section == Section::Rows) {
            if (f.size() != 11) {
                throw ParseError(line_no, "expected 11 fields");
            }
            MethodRow row;
            row.method = rd.method(f[0]);
            row.accuracy = rd.real(f[1]);
            row.train_accuracy = rd.real(f[2]);
            row.accuracy_delta = rd.real(f[3]);
            row.tcd = rd.integer<int>(f[4]);
            row.speedup = rd.real(f[5]);
            row.metric = rd.real(f[6]);
            if (!f[7].empty()) {
                row.noisy_accuracy = rd.real(f[7]);
            }
            row.iterations = rd.integer<int>(f[8]);
            row.converged = rd.integer<int>(f[9]) != 0;
            row.masked = rd.integer<std::size_t>(f[10]);
            r.rows.push_back(row);
        } else if (section == Section::Traces) {
            if (f.size() != 9) {
                throw ParseError(line_no, "expected 9 fields");
            }
            const Method m = rd.method(f[0]);
            auto it = std::find_if(r.traces.begin(), r.traces.end(),
                                   [&](const MethodTrace &t) { return t.method == m; });
            if (it == r.traces.end()) {
                throw ParseError(line_no, "trace for a method without a row");
            }
            IterationRecord rec;
            rec.iter = rd.integer<int>(f[1]);
            rec.loss = rd.real(f[2]);
            rec.accuracy = rd.real(f[3]);
            rec.tcd = rd.integer<int>(f[4]);
            rec.theta_z_gap = rd.real(f[5]);
            rec.dtheta_sq = rd.real(f[6]);
            rec.dz_sq = rd.real(f[7]);
            rec.masked = rd.integer<std::size_t>(f[8]);
            it->iterations.push_back(rec);
        } else {
            throw ParseError(line_no, "data before header");
        }
    }
    if (r.rows.empty()) {
        throw ParseError(line_no, "no report rows");
    }
    return r;
}

} // namespace qcompress
