// Copyright 2026 the hlfock authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <cstddef>

#include "hlfock/types.hpp"

namespace hlfock {

/// Dense row-major complex matrix. trunc_dim records the Fock-space
/// truncation the matrix represents (defaults to the row count; padded
/// oracle matrices carry the smaller logical dimension).
class ComplexMatrix {
public:
    using EigenMap = Eigen::Map<
        Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
    using ConstEigenMap = Eigen::Map<
        const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), trunc_dim_(rows), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = {1.0, 0.0};
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t trunc_dim() const { return trunc_dim_; }
    void set_trunc_dim(std::size_t d) { trunc_dim_ = d; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex>& data() const { return data_; }
    std::vector<Complex>& data() { return data_; }

    EigenMap map() { return EigenMap(data_.data(), rows_, cols_); }
    ConstEigenMap map() const { return ConstEigenMap(data_.data(), rows_, cols_); }

    ComplexMatrix adjoint() const {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
        out.trunc_dim_ = trunc_dim_;
        return out;
    }

    /// Top-left block.
    ComplexMatrix block(std::size_t rows, std::size_t cols) const {
        ComplexMatrix out(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(i, j);
        return out;
    }

    Complex trace() const {
        KahanSum<Complex> s;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s.add((*this)(i, i));
        return s.value();
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t trunc_dim_ = 0;
    std::vector<Complex> data_;
};

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows(), b.cols());
    out.map() = a.map() * b.map();
    return out;
}

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows(), a.cols());
    out.map() = a.map() + b.map();
    return out;
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows(), a.cols());
    out.map() = a.map() - b.map();
    return out;
}

inline ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
    ComplexMatrix out(a.rows(), a.cols());
    out.map() = s * a.map();
    return out;
}

inline double max_abs(const ComplexMatrix& m) {
    double v = 0.0;
    for (const auto& e : m.data()) v = std::max(v, std::abs(e));
    return v;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double v = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            v = std::max(v, std::abs(a(i, j) - b(i, j)));
    return v;
}

/// max |M - M^dagger| over all entries.
inline double hermiticity_defect(const ComplexMatrix& m) {
    double v = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            v = std::max(v, std::abs(m(i, j) - std::conj(m(j, i))));
    return v;
}

/// Eigenvalues of the Hermitian part (M + M^dagger)/2, ascending.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    Eigen::MatrixXcd h = m.map();
    h = 0.5 * (h + h.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

inline double min_hermitian_eigenvalue(const ComplexMatrix& m) {
    return hermitian_eigenvalues(m).front();
}

}  // namespace hlfock
