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
#include "qcompress/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace qcompress {

DenseMatrix::DenseMatrix(std::size_t dim, std::vector<Complex> data)
    : dim_(dim), data_(std::move(data)) {
    if (data_.size() != dim_ * dim_) {
        throw std::invalid_argument("DenseMatrix: data size does not match dim*dim");
    }
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

DenseMatrix DenseMatrix::from(const Mat2 &m) { return DenseMatrix(2, {m[0], m[1], m[2], m[3]}); }

DenseMatrix DenseMatrix::operator*(const DenseMatrix &rhs) const {
    if (rhs.dim_ != dim_) {
        throw std::invalid_argument("DenseMatrix: dimension mismatch");
    }
    DenseMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Complex a = (*this)(r, k);
            if (a == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < dim_; ++c) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

DenseMatrix DenseMatrix::operator*(Complex s) const {
    DenseMatrix out = *this;
    for (auto &v : out.data_) {
        v *= s;
    }
    return out;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

double DenseMatrix::max_abs_diff(const DenseMatrix &rhs) const {
    if (rhs.dim_ != dim_) {
        throw std::invalid_argument("DenseMatrix: dimension mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        worst = std::max(worst, std::abs(data_[i] - rhs.data_[i]));
    }
    return worst;
}

std::optional<Complex> DenseMatrix::phase_relative_to(const DenseMatrix &rhs, double tol) const {
    if (rhs.dim_ != dim_) {
        return std::nullopt;
    }
    // Anchor the phase on the largest entry of rhs.
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < rhs.data_.size(); ++i) {
        if (std::abs(rhs.data_[i]) > std::abs(rhs.data_[pivot])) {
            pivot = i;
        }
    }
    if (std::abs(rhs.data_[pivot]) < tol) {
        return std::nullopt;
    }
    Complex c = data_[pivot] / rhs.data_[pivot];
    if (std::abs(std::abs(c) - 1.0) > std::sqrt(tol)) {
        return std::nullopt;
    }
    c /= std::abs(c);
    if (max_abs_diff(rhs * c) > tol) {
        return std::nullopt;
    }
    return c;
}

bool DenseMatrix::is_phase_identity(double tol) const {
    return phase_relative_to(identity(dim_), tol).has_value();
}

bool DenseMatrix::is_unitary(double tol) const {
    return ((*this) * adjoint()).max_abs_diff(identity(dim_)) <= tol;
}

Mat2 to_mat2(const DenseMatrix &m) {
    if (m.dim() != 2) {
        throw std::invalid_argument("to_mat2: matrix is not 2x2");
    }
    return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

} // namespace qcompress
