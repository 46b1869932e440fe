#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

/// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    /// Rows given as nested vectors; all rows must share one length.
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    /// Columns given as vectors of length `rows`.
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    Vector column(std::size_t c) const;
    std::span<const Rational> entries() const noexcept { return data_; }

    bool is_zero() const;
    Matrix transpose() const;

    Vector operator*(std::span<const Rational> x) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator-() const;
    friend Matrix operator*(const Rational& s, const Matrix& m);

    bool operator==(const Matrix& rhs) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Row-major flattening of a matrix into a vector of length rows*cols.
Vector flatten(const Matrix& m);
Matrix unflatten(std::span<const Rational> v, std::size_t rows, std::size_t cols);

/// Σ_i x[i] * mats[i]; all matrices share one shape (rows x cols).
Matrix linear_combination(std::span<const Matrix> mats, std::span<const Rational> x,
                          std::size_t rows, std::size_t cols);

}  // namespace leibniz
