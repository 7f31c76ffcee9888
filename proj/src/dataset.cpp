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
#include "qcompress/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "qcompress/errors.hpp"

namespace qcompress {

Dataset split_dataset(std::vector<Sample> samples, int n_classes, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::shuffle(samples.begin(), samples.end(), rng);
    const auto n_train = static_cast<std::size_t>(
        std::llround(kTrainFraction * static_cast<double>(samples.size())));
    Dataset d;
    d.n_classes = n_classes;
    d.seed = seed;
    d.train.assign(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(n_train));
    d.test.assign(samples.begin() + static_cast<std::ptrdiff_t>(n_train), samples.end());
    return d;
}

Dataset generate_synthetic(int n_features, std::size_t n_samples, std::uint64_t seed,
                           const SyntheticConfig &cfg) {
    if (n_features != 4 && n_features != 16) {
        throw ConfigError("synthetic data supports 4 or 16 features, got " +
                          std::to_string(n_features));
    }
    if (n_samples < 2) {
        throw ConfigError("synthetic data needs at least two samples");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> low(cfg.low_mean, cfg.stddev);
    std::normal_distribution<double> high(cfg.high_mean, cfg.stddev);
    const auto half = static_cast<std::size_t>(n_features / 2);

    std::vector<Sample> all;
    all.reserve(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        Sample s;
        s.label = i < n_samples / 2 ? 0 : 1;
        s.features.resize(static_cast<std::size_t>(n_features));
        for (std::size_t k = 0; k < s.features.size(); ++k) {
            const bool first_half = k < half;
            const bool use_low = (s.label == 0) == first_half;
            s.features[k] = std::clamp(use_low ? low(rng) : high(rng), 0.0, 1.0);
        }
        all.push_back(std::move(s));
    }
    return split_dataset(std::move(all), 2, seed);
}

std::vector<double> average_pool_28x28(std::span<const double> image) {
    if (image.size() != 28 * 28) {
        throw DataError("pooling expects 784 pixels, got " + std::to_string(image.size()));
    }
    std::vector<double> out(16, 0.0);
    for (std::size_t r = 0; r < 28; ++r) {
        for (std::size_t c = 0; c < 28; ++c) {
            out[(r / 7) * 4 + c / 7] += image[r * 28 + c];
        }
    }
    for (auto &v : out) {
        v /= 49.0;
    }
    return out;
}

Dataset parse_csv(std::string_view text, int n_classes, std::uint64_t seed, bool pool_28x28) {
    if (n_classes < 1) {
        throw ConfigError("n_classes must be positive");
    }
    std::vector<Sample> all;
    std::size_t line_no = 0;
    std::size_t width = 0;
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
        if (line.empty()) {
            continue;
        }
        std::vector<double> cells;
        std::size_t pos = 0;
        while (true) {
            const auto comma = line.find(',', pos);
            auto cell = line.substr(pos, comma == std::string_view::npos ? line.npos : comma - pos);
            while (!cell.empty() && cell.front() == ' ') {
                cell.remove_prefix(1);
            }
            while (!cell.empty() && cell.back() == ' ') {
                cell.remove_suffix(1);
            }
            double v = 0.0;
            const auto *e = cell.data() + cell.size();
            auto [ptr, ec] = std::from_chars(cell.data(), e, v);
            if (cell.empty() || ec != std::errc{} || ptr != e || !std::isfinite(v)) {
                throw ParseError(line_no, "non-numeric cell '" + std::string(cell) + "'");
            }
            cells.push_back(v);
            if (comma == std::string_view::npos) {
                break;
            }
            pos = comma + 1;
        }
        if (cells.size() < 2) {
            throw ParseError(line_no, "expected label followed by features");
        }
        const double lab = cells[0];
        if (lab != std::floor(lab) || lab < 0 || lab >= n_classes) {
            throw ParseError(line_no, "label must be an integer in [0, " +
                                          std::to_string(n_classes) + ")");
        }
        Sample s;
        s.label = static_cast<int>(lab);
        s.features.assign(cells.begin() + 1, cells.end());
        if (width == 0) {
            width = s.features.size();
        } else if (s.features.size() != width) {
            throw ParseError(line_no, "expected " + std::to_string(width) + " features, got " +
                                          std::to_string(s.features.size()));
        }
        if (pool_28x28) {
            if (s.features.size() != 784) {
                throw ParseError(line_no, "pooling needs 784 features per row");
            }
            s.features = average_pool_28x28(s.features);
        }
        all.push_back(std::move(s));
    }
    if (all.empty()) {
        throw DataError("dataset file has no rows");
    }
    return split_dataset(std::move(all), n_classes, seed);
}

Dataset load_csv(const std::filesystem::path &path, int n_classes, std::uint64_t seed,
                 bool pool_28x28) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open dataset " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_csv(ss.str(), n_classes, seed, pool_28x28);
}

EncoderSpec EncoderSpec::angle(int n_features, int n_qubits) {
    if (n_features < 1 || n_qubits < 1) {
        throw EncodeError("angle encoding needs at least one feature and one qubit");
    }
    std::vector<GateKind> kinds;
    if (n_features == 4) {
        kinds = {GateKind::RY, GateKind::RY, GateKind::RZ, GateKind::RZ};
    } else if (n_features == 16) {
        for (GateKind k : {GateKind::RY, GateKind::RZ, GateKind::RX, GateKind::RY}) {
            kinds.insert(kinds.end(), 4, k);
        }
    } else {
        kinds.assign(static_cast<std::size_t>(n_features), GateKind::RY);
    }
    EncoderSpec spec;
    for (int k = 0; k < n_features; ++k) {
        spec.gate_plan.emplace_back(kinds[static_cast<std::size_t>(k)], k % n_qubits);
    }
    return spec;
}

std::vector<Gate> EncoderSpec::gates() const {
    std::vector<Gate> out;
    for (std::size_t k = 0; k < gate_plan.size(); ++k) {
        out.push_back({gate_plan[k].first, {gate_plan[k].second}, {ParamRef::feature(k)}, false});
    }
    return out;
}

std::size_t feature_count(const Circuit &circuit) {
    if (circuit.encoding == EncodingScheme::Amplitude) {
        return std::size_t{1} << circuit.n_qubits;
    }
    std::size_t n = 0;
    for (const auto &g : circuit.encoder) {
        for (const auto &p : g.params) {
            if (p.source == ParamRef::Source::Feature) {
                n = std::max(n, p.index + 1);
            }
        }
    }
    return n;
}

StateVector amplitude_state(std::span<const double> features, int n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (features.size() != dim) {
        throw EncodeError("amplitude encoding of " + std::to_string(n_qubits) + " qubits needs " +
                          std::to_string(dim) + " features, got " +
                          std::to_string(features.size()));
    }
    double norm = 0.0;
    for (double f : features) {
        norm += f * f;
    }
    norm = std::sqrt(norm);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw EncodeError("amplitude encoding of a zero-norm feature vector");
    }
    std::vector<Complex> amps(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        amps[i] = features[i] / norm;
    }
    return StateVector::from_amplitudes(n_qubits, std::move(amps));
}

StateVector initial_state(const Circuit &circuit, std::span<const double> features) {
    if (circuit.encoding == EncodingScheme::Amplitude) {
        return amplitude_state(features, circuit.n_qubits);
    }
    const std::size_t need = feature_count(circuit);
    if (features.size() != need) {
        throw EncodeError("encoder consumes " + std::to_string(need) + " features, sample has " +
                          std::to_string(features.size()));
    }
    return StateVector(circuit.n_qubits);
}

} // namespace qcompress
