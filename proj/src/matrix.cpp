#include "leibniz/matrix.hpp"

#include <algorithm>

#include "leibniz/errors.hpp"

namespace leibniz {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InputError("Matrix::from_rows: ragged rows");
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw InputError("Matrix::from_columns: ragged columns");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

bool Matrix::is_zero() const { return leibniz::is_zero(std::span<const Rational>(data_)); }

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::operator*(std::span<const Rational> x) const {
    if (x.size() != cols_) throw InputError("Matrix * vector: dimension mismatch");
    Vector y(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (sgn(x[c]) == 0) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Rational& a = (*this)(r, c);
            if (sgn(a) != 0) y[r] += a * x[c];
        }
    }
    return y;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw InputError("Matrix * Matrix: dimension mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (sgn(a) == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                const Rational& b = rhs(k, c);
                if (sgn(b) != 0) out(r, c) += a * b;
            }
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("Matrix +: shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("Matrix -: shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& q : out.data_) q = -q;
    return out;
}

Matrix operator*(const Rational& s, const Matrix& m) {
    Matrix out = m;
    for (auto& q : out.data_) q *= s;
    return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Vector flatten(const Matrix& m) { return Vector(m.entries().begin(), m.entries().end()); }

Matrix unflatten(std::span<const Rational> v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw InputError("unflatten: length mismatch");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
    return m;
}

Matrix linear_combination(std::span<const Matrix> mats, std::span<const Rational> x,
                          std::size_t rows, std::size_t cols) {
    if (mats.size() != x.size()) throw InputError("linear_combination: length mismatch");
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        if (mats[i].rows() != rows || mats[i].cols() != cols)
            throw InputError("linear_combination: shape mismatch");
        out = out + x[i] * mats[i];
    }
    return out;
}

}  // namespace leibniz
