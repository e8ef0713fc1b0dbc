#pragma once

#include "powsolve/rational.hpp"

#include <cassert>
#include <cstddef>
#include <vector>

namespace powsolve {

/// Dense row-major matrix for the small sizes this library needs (n <= ~16).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const T& operator()(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    std::vector<T> row(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }
    std::vector<T> column(std::size_t c) const {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, data_.empty() ? T() : data_.front());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix out(a.rows_, b.cols_, a.data_.front() - a.data_.front());
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
        return out;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }
    friend Matrix operator*(const T& s, Matrix a) {
        for (auto& x : a.data_) x = s * x;
        return a;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

RationalMatrix identityMatrix(std::size_t n);

struct EchelonForm {
    /// Integer row echelon form from fraction-free elimination.
    Matrix<Integer> reduced;
    std::vector<std::size_t> pivotColumns;
};

/// Fraction-free (Bareiss) row reduction after clearing each row's denominators.
EchelonForm bareissEchelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Exact nullspace basis. Free columns are visited from last to first; each basis vector
/// sets its free column to 1 and the other free columns to 0.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// Throws std::domain_error when singular.
RationalMatrix inverse(const RationalMatrix& m);

Rational trace(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);

/// Characteristic polynomial det(tI - m) by Faddeev-LeVerrier, ascending coefficients
/// (index = power of t), monic.
std::vector<Rational> characteristicPolynomial(const RationalMatrix& m);

bool isZero(const RationalMatrix& m);

/// Rank of the span of the given matrices viewed as vectors.
std::size_t spanRank(const std::vector<RationalMatrix>& matrices);

/// True when span(a) == span(b).
bool sameSpan(const std::vector<RationalMatrix>& a, const std::vector<RationalMatrix>& b);

}  // namespace powsolve
