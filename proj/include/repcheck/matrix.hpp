// Copyright 2026 The repcheck Authors
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

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "repcheck/cyclo.hpp"

namespace repcheck {

/// Dense row-major matrix over Q(zeta8).
class ExactMatrix {
   public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<CycloNum> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw Error(ErrorKind::DimensionMismatch, "matrix data size");
    }
    ExactMatrix(std::initializer_list<std::initializer_list<CycloNum>> rows) : rows_(rows.size()) {
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto &r : rows) {
            if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t k = 0; k < n; k++) m(k, k) = 1;
        return m;
    }
    static ExactMatrix column(std::vector<CycloNum> v) {
        const std::size_t n = v.size();
        return {n, 1, std::move(v)};
    }
    static ExactMatrix basis_column(std::size_t n, std::size_t k) {
        ExactMatrix m(n, 1);
        m(k, 0) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    CycloNum &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const CycloNum &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<CycloNum> &data() const { return data_; }

    ExactMatrix adjoint() const {
        ExactMatrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; r++)
            for (std::size_t c = 0; c < cols_; c++) m(c, r) = (*this)(r, c).conj();
        return m;
    }

    CycloNum trace() const {
        require_square("trace");
        CycloNum t;
        for (std::size_t k = 0; k < rows_; k++) t += (*this)(k, k);
        return t;
    }

    bool is_zero() const {
        for (const auto &x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    /// c when this == c * identity.
    std::optional<CycloNum> as_scalar() const {
        if (!is_square() || rows_ == 0) return std::nullopt;
        const CycloNum c = (*this)(0, 0);
        for (std::size_t r = 0; r < rows_; r++)
            for (std::size_t k = 0; k < cols_; k++)
                if ((*this)(r, k) != (r == k ? c : CycloNum())) return std::nullopt;
        return c;
    }

    bool is_unitary() const { return is_square() && adjoint() * *this == identity(rows_); }
    bool is_hermitian() const { return is_square() && adjoint() == *this; }

    ExactMatrix &operator+=(const ExactMatrix &o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); k++) data_[k] += o.data_[k];
        return *this;
    }
    ExactMatrix &operator-=(const ExactMatrix &o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); k++) data_[k] -= o.data_[k];
        return *this;
    }
    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix &b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix &b) { return a -= b; }
    friend ExactMatrix operator*(const CycloNum &s, ExactMatrix m) {
        for (auto &x : m.data_) x = s * x;
        return m;
    }
    friend ExactMatrix operator*(const ExactMatrix &a, const ExactMatrix &b) {
        if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
        ExactMatrix m(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; r++)
            for (std::size_t k = 0; k < a.cols_; k++) {
                const CycloNum &x = a(r, k);
                if (x.is_zero()) continue;
                for (std::size_t c = 0; c < b.cols_; c++) {
                    if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
                }
            }
        return m;
    }
    friend bool operator==(const ExactMatrix &a, const ExactMatrix &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const ExactMatrix &a, const ExactMatrix &b) { return !(a == b); }
    friend bool operator<(const ExactMatrix &a, const ExactMatrix &b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        return a.data_ < b.data_;
    }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t r = 0; r < rows_; r++) {
            os << "[";
            for (std::size_t c = 0; c < cols_; c++) os << (c ? ", " : "") << (*this)(r, c).str();
            os << "]\n";
        }
        return os.str();
    }

   private:
    void require_square(const char *what) const {
        if (!is_square()) throw Error(ErrorKind::DimensionMismatch, std::string(what) + " of a non-square matrix");
    }
    void require_same_shape(const ExactMatrix &o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<CycloNum> data_;
};

inline ExactMatrix kron(const ExactMatrix &a, const ExactMatrix &b) {
    ExactMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ar++)
        for (std::size_t ac = 0; ac < a.cols(); ac++) {
            if (a(ar, ac).is_zero()) continue;
            for (std::size_t br = 0; br < b.rows(); br++)
                for (std::size_t bc = 0; bc < b.cols(); bc++)
                    m(ar * b.rows() + br, ac * b.cols() + bc) = a(ar, ac) * b(br, bc);
        }
    return m;
}

/// Hilbert-Schmidt inner product tr(X^dagger Y).
inline CycloNum hs_inner(const ExactMatrix &x, const ExactMatrix &y) { return (x.adjoint() * y).trace(); }

/// Vector state, stored unnormalized. Qubit tensor factors are ordered with the
/// first factor most significant.
class PureState {
   public:
    PureState() = default;
    explicit PureState(ExactMatrix column) : v_(std::move(column)) {
        if (v_.cols() != 1) throw Error(ErrorKind::DimensionMismatch, "state must be a column vector");
    }
    explicit PureState(std::vector<CycloNum> amplitudes) : v_(ExactMatrix::column(std::move(amplitudes))) {}

    std::size_t dim() const { return v_.rows(); }
    const ExactMatrix &column() const { return v_; }
    const CycloNum &operator[](std::size_t k) const { return v_(k, 0); }

    /// <psi|psi>, a non-negative rational.
    Rational norm2() const {
        CycloNum s;
        for (std::size_t k = 0; k < dim(); k++) s += v_(k, 0).norm2();
        return s.rational_value();
    }
    bool is_zero() const { return v_.is_zero(); }

    /// <this|other>
    CycloNum inner(const PureState &other) const { return (v_.adjoint() * other.v_)(0, 0); }

    /// c with other == c * this, when the two are parallel.
    std::optional<CycloNum> ratio_to(const PureState &other) const {
        if (dim() != other.dim()) return std::nullopt;
        std::optional<CycloNum> c;
        for (std::size_t k = 0; k < dim() && !c; k++) {
            if (!(*this)[k].is_zero()) c = other[k] / (*this)[k];
        }
        if (!c) return std::nullopt;
        if (*c * v_ != other.v_) return std::nullopt;
        return c;
    }

    bool parallel_to(const PureState &other) const { return !other.is_zero() && ratio_to(other).has_value(); }

    friend PureState operator*(const ExactMatrix &m, const PureState &s) { return PureState(m * s.v_); }
    friend PureState operator*(const CycloNum &c, const PureState &s) { return PureState(c * s.v_); }
    friend bool operator==(const PureState &a, const PureState &b) { return a.v_ == b.v_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t k = 0; k < dim(); k++) s += (k ? ", " : "") + (*this)[k].str();
        return s + ")";
    }

   private:
    ExactMatrix v_;
};

inline PureState kron(const PureState &a, const PureState &b) { return PureState(kron(a.column(), b.column())); }

}  // namespace repcheck
