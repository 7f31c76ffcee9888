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
#include "qcompress/angles.hpp"

#include <cmath>
#include <string>

#include "qcompress/errors.hpp"

namespace qcompress {

double wrap_to(double x, double period) {
    if (!std::isfinite(x)) {
        throw ValueError("angle is not finite: " + std::to_string(x));
    }
    double r = std::fmod(x, period);
    if (r < 0.0) {
        r += period;
    }
    // fmod of a tiny negative value can round back up to the period.
    if (r >= period) {
        r = 0.0;
    }
    return r;
}

double wrap_param(double x) { return wrap_to(x, kFourPi); }

double circular_residual(double a, double b) {
    double d = wrap_param(a - b);
    if (d > kTwoPi) {
        d -= kFourPi;
    }
    return d;
}

double circular_distance(double a, double b) { return std::abs(circular_residual(a, b)); }

double circular_distance(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        const double r = circular_residual(a[i], b[i]);
        acc += r * r;
    }
    return std::sqrt(acc);
}

bool congruent(double x, double target, double period, double tol) {
    const double d = wrap_to(x - target, period);
    return d < tol || period - d < tol;
}

} // namespace qcompress
