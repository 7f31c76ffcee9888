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

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace qcompress {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix, the operand of every simulator kernel.
using Mat2 = std::array<Complex, 4>;

/// Small dense square complex matrix (row-major). Sized for gate-level
/// algebra: 2x2 and 4x4 unitaries and their products.
class DenseMatrix {
  public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    DenseMatrix(std::size_t dim, std::vector<Complex> data);

    static DenseMatrix identity(std::size_t dim);
    static DenseMatrix from(const Mat2 &m);

    std::size_t dim() const noexcept { return dim_; }
    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data_[r * dim_ + c];
    }
    const std::vector<Complex> &data() const noexcept { return data_; }

    DenseMatrix operator*(const DenseMatrix &rhs) const;
    DenseMatrix operator*(Complex s) const;
    DenseMatrix adjoint() const;

    /// Largest elementwise modulus of (this - rhs).
    double max_abs_diff(const DenseMatrix &rhs) const;

    /// Returns c when this == c * rhs within tol for some unit-modulus c.
    std::optional<Complex> phase_relative_to(const DenseMatrix &rhs, double tol) const;

    /// True when the matrix is c * I for some unit-modulus c.
    bool is_phase_identity(double tol) const;

    bool is_unitary(double tol) const;

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Extracts the 2x2 block of a 2x2 DenseMatrix.
Mat2 to_mat2(const DenseMatrix &m);

} // namespace qcompress
