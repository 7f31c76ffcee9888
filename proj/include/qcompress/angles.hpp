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

#include <numbers>
#include <span>

namespace qcompress {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kFourPi = 4.0 * std::numbers::pi;

/// Snap tolerance used when matching an angle against a special value.
inline constexpr double kAngleSnapTol = 1e-9;

/// Maps any finite angle onto the canonical parameter range [0, 4π).
/// Throws ValueError for NaN or infinities.
double wrap_param(double x);

/// Maps onto [0, period).
double wrap_to(double x, double period);

/// Signed residual a - b taken on the [0, 4π) circle, in (-2π, 2π].
double circular_residual(double a, double b);

/// |circular_residual(a, b)|.
double circular_distance(double a, double b);

/// Euclidean norm of per-component circular residuals.
double circular_distance(std::span<const double> a, std::span<const double> b);

/// True when x is within tol of target modulo period.
bool congruent(double x, double target, double period, double tol = kAngleSnapTol);

} // namespace qcompress
