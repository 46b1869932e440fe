#include "leibniz/linalg.hpp"

#include <utility>

#include "leibniz/errors.hpp"

namespace leibniz {
namespace {

using IntRow = std::vector<mpz_class>;

// Scales each row by the lcm of its denominators.
std::vector<IntRow> integer_rows(const Matrix& m) {
    std::vector<IntRow> rows(m.rows(), IntRow(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (const auto& q : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& q = m(r, c);
            if (sgn(q) != 0) rows[r][c] = q.get_num() * (l / q.get_den());
        }
    }
    return rows;
}

}  // namespace

RrefResult rref(const Matrix& m) {
    const std::size_t nrows = m.rows();
    const std::size_t ncols = m.cols();
    auto a = integer_rows(m);

    // Bareiss: after step t every entry below the pivot rows is a (t+1)-minor,
    // so the division by the previous pivot is exact.
    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    mpz_class tmp;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && sgn(a[p][c]) == 0) ++p;
        if (p == nrows) continue;
        std::swap(a[p], a[r]);
        const mpz_class piv = a[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            const mpz_class factor = a[i][c];
            const bool zero_factor = sgn(factor) == 0;
            for (std::size_t j = c + 1; j < ncols; ++j) {
                if (zero_factor && sgn(a[i][j]) == 0) continue;
                tmp = piv * a[i][j];
                if (!zero_factor && sgn(a[r][j]) != 0) tmp -= factor * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }

    RrefResult out{Matrix(nrows, ncols), pivots.size(), pivots};
    Matrix& red = out.reduced;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const mpz_class& piv = a[i][pivots[i]];
        for (std::size_t j = pivots[i]; j < ncols; ++j) {
            if (sgn(a[i][j]) == 0) continue;
            red(i, j) = Rational(a[i][j], piv);
            red(i, j).canonicalize();
        }
    }
    // Back-substitution, bottom pivot first.
    for (std::size_t i = pivots.size(); i-- > 0;) {
        const std::size_t pc = pivots[i];
        for (std::size_t above = 0; above < i; ++above) {
            const Rational f = red(above, pc);
            if (sgn(f) == 0) continue;
            for (std::size_t j = pc; j < ncols; ++j) {
                if (sgn(red(i, j)) != 0) red(above, j) -= f * red(i, j);
            }
        }
    }
    return out;
}

// Forward elimination only, touching just the rows with a nonzero entry in the
// pivot column; each updated row is divided by its content to keep entries small.
std::size_t rank(const Matrix& m) {
    auto a = integer_rows(m);
    const std::size_t nrows = m.rows();
    const std::size_t ncols = m.cols();
    mpz_class g, fr, fi, content;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && sgn(a[p][c]) == 0) ++p;
        if (p == nrows) continue;
        std::swap(a[p], a[r]);
        const IntRow& pivot_row = a[r];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            if (sgn(a[i][c]) == 0) continue;
            IntRow& row = a[i];
            mpz_gcd(g.get_mpz_t(), pivot_row[c].get_mpz_t(), row[c].get_mpz_t());
            mpz_divexact(fr.get_mpz_t(), pivot_row[c].get_mpz_t(), g.get_mpz_t());
            mpz_divexact(fi.get_mpz_t(), row[c].get_mpz_t(), g.get_mpz_t());
            row[c] = 0;
            content = 0;
            for (std::size_t j = c + 1; j < ncols; ++j) {
                if (sgn(pivot_row[j]) == 0) {
                    if (sgn(row[j]) != 0) row[j] *= fr;
                } else {
                    row[j] *= fr;
                    mpz_submul(row[j].get_mpz_t(), fi.get_mpz_t(), pivot_row[j].get_mpz_t());
                }
                if (sgn(row[j]) != 0) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), row[j].get_mpz_t());
            }
            if (content > 1)
                for (std::size_t j = c + 1; j < ncols; ++j)
                    if (sgn(row[j]) != 0) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), content.get_mpz_t());
        }
        ++r;
    }
    return r;
}

Subspace::Subspace(std::size_t ambient_dim, std::vector<Vector> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
    for (const auto& v : basis_) {
        if (v.size() != ambient_dim_) throw InputError("Subspace: basis vector of wrong length");
    }
    if (leibniz::rank(Matrix::from_rows(basis_, ambient_dim_)) != basis_.size()) {
        throw InputError("Subspace: basis vectors are linearly dependent");
    }
}

Subspace Subspace::span_of(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    const auto red = rref(Matrix::from_rows(vectors, ambient_dim));
    Subspace s(ambient_dim);
    for (std::size_t i = 0; i < red.rank; ++i) {
        const auto row = red.reduced.row(i);
        s.basis_.emplace_back(row.begin(), row.end());
    }
    return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) s.basis_.push_back(unit_vector(ambient_dim, i));
    return s;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_columns(basis_, ambient_dim_); }

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
    if (v.size() != ambient_dim_) throw InputError("Subspace::coordinates: length mismatch");
    return solve(basis_matrix(), v);
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis()) {
        if (!contains(v)) return false;
    }
    return true;
}

Subspace kernel_basis(const Matrix& m) {
    const auto red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : red.pivot_columns) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector x(m.cols());
        x[f] = 1;
        for (std::size_t i = 0; i < red.rank; ++i) x[red.pivot_columns[i]] = -red.reduced(i, f);
        basis.push_back(std::move(x));
    }
    return Subspace(m.cols(), std::move(basis));
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw InputError("solve: right-hand side has wrong length");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const auto red = rref(aug);
    if (!red.pivot_columns.empty() && red.pivot_columns.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t i = 0; i < red.rank; ++i) x[red.pivot_columns[i]] = red.reduced(i, m.cols());
    return x;
}

CoordinateMap::CoordinateMap(const Subspace& space)
    : basis_(space.basis_matrix()), left_inverse_(space.dim(), space.ambient_dim()) {
    // Row-reduce [B | I]; the rows of the identity block aligned with the
    // pivot rows give a left inverse of B.
    const std::size_t amb = space.ambient_dim();
    const std::size_t d = space.dim();
    Matrix aug(amb, d + amb);
    for (std::size_t r = 0; r < amb; ++r) {
        for (std::size_t c = 0; c < d; ++c) aug(r, c) = basis_(r, c);
        aug(r, d + r) = 1;
    }
    const auto red = rref(aug);
    for (std::size_t i = 0; i < d; ++i) {
        if (red.pivot_columns.size() <= i || red.pivot_columns[i] != i)
            throw InternalError("CoordinateMap: basis is not independent");
        for (std::size_t c = 0; c < amb; ++c) left_inverse_(i, c) = red.reduced(i, d + c);
    }
}

std::optional<Vector> CoordinateMap::operator()(const Vector& v) const {
    if (v.size() != basis_.rows()) throw InputError("CoordinateMap: length mismatch");
    Vector coords = left_inverse_ * v;
    if (basis_ * coords != v) return std::nullopt;
    return coords;
}

}  // namespace leibniz
