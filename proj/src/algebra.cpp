#include "leibniz/algebra.hpp"

#include <algorithm>

#include "leibniz/errors.hpp"

namespace leibniz {

std::string describe(const Witness& w) {
    std::string out = w.identity + " at (";
    for (std::size_t i = 0; i < w.indices.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w.indices[i]);
    }
    return out + "): defect " + format_vector(w.defect);
}

LeibnizAlgebra::LeibnizAlgebra(std::size_t dim, std::vector<Rational> constants)
    : dim_(dim), c_(std::move(constants)) {
    if (c_.size() != dim * dim * dim) throw InputError("LeibnizAlgebra: expected n^3 structure constants");
}

Vector LeibnizAlgebra::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
    if (x.size() != dim_ || y.size() != dim_) throw InputError("bracket: dimension mismatch");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (sgn(y[j]) == 0) continue;
            const Rational s = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                if (sgn(c(i, j, k)) != 0) out[k] += s * c(i, j, k);
            }
        }
    }
    return out;
}

Matrix LeibnizAlgebra::left_multiplication(std::size_t i) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) m(k, j) = c(i, j, k);
    return m;
}

Matrix LeibnizAlgebra::right_multiplication(std::size_t i) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) m(k, j) = c(j, i, k);
    return m;
}

IdentityReport check_leibniz(const LeibnizAlgebra& g) {
    const std::size_t n = g.dim();
    IdentityReport report;
    for (std::size_t i = 0; i < n; ++i) {
        const auto ei = unit_vector(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            const auto ej = unit_vector(n, j);
            const auto ij = g.bracket_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                const auto ek = unit_vector(n, k);
                Vector defect = g.bracket(ei, g.bracket_basis(j, k));
                axpy(defect, -1, g.bracket(ij, ek));
                axpy(defect, -1, g.bracket(ej, g.bracket_basis(i, k)));
                report.expect_zero("leibniz", {i, j, k}, std::move(defect));
            }
        }
    }
    return report;
}

Subspace left_center(const LeibnizAlgebra& g) {
    const std::size_t n = g.dim();
    // Row (j, k), column i: coefficient of e_k in [e_i, e_j].
    Matrix m(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = g.c(i, j, k);
    return kernel_basis(m);
}

Subspace derived_subalgebra(const LeibnizAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<Vector> products;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto b = g.bracket_basis(i, j);
            products.emplace_back(b.begin(), b.end());
        }
    return Subspace::span_of(n, products);
}

bool is_lie(const LeibnizAlgebra& g) {
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (g.c(i, j, k) != -g.c(j, i, k)) return false;
    return true;
}

IdentityReport square_in_center_check(const LeibnizAlgebra& g) {
    const std::size_t n = g.dim();
    IdentityReport report;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const Vector sym = Vector(g.bracket_basis(i, j).begin(), g.bracket_basis(i, j).end()) +
                               Vector(g.bracket_basis(j, i).begin(), g.bracket_basis(j, i).end());
            for (std::size_t k = 0; k < n; ++k) {
                report.expect_zero("square-in-center", {i, j, k}, g.bracket(sym, unit_vector(n, k)));
            }
        }
    return report;
}

IdentityReport left_center_ideal_check(const LeibnizAlgebra& g) {
    const std::size_t n = g.dim();
    const Subspace z = left_center(g);
    const CoordinateMap in_center(z);
    IdentityReport report;
    for (std::size_t b = 0; b < z.dim(); ++b) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto ei = unit_vector(n, i);
            report.expect_zero("center-left", {b, i}, g.bracket(z.basis()[b], ei));
            Vector right = g.bracket(ei, z.basis()[b]);
            if (!in_center(right)) report.add("center-right", {i, b}, std::move(right));
        }
    }
    return report;
}

Quotient quotient_by_left_center(const LeibnizAlgebra& g) {
    const std::size_t n = g.dim();
    const Subspace z = left_center(g);
    const auto red = rref(Matrix::from_rows(z.basis(), n));

    Quotient q;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::find(red.pivot_columns.begin(), red.pivot_columns.end(), i) ==
            red.pivot_columns.end())
            q.complement.push_back(i);
    }
    const std::size_t zd = z.dim();
    const std::size_t qd = q.complement.size();

    // Columns: center basis, then the complementary standard vectors.
    std::vector<Vector> cols = z.basis();
    for (auto i : q.complement) cols.push_back(unit_vector(n, i));
    const Subspace adapted(n, cols);
    const CoordinateMap coords(adapted);

    q.projection = Matrix(qd, n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto x = coords(unit_vector(n, j));
        if (!x) throw InternalError("quotient: adapted basis does not span g");
        for (std::size_t a = 0; a < qd; ++a) q.projection(a, j) = (*x)[zd + a];
    }

    for (const auto& zb : z.basis()) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto ei = unit_vector(n, i);
            if (!is_zero(q.projection * g.bracket(zb, ei)) ||
                !is_zero(q.projection * g.bracket(ei, zb)))
                throw InternalError("quotient: left center is not an ideal");
        }
    }

    q.algebra = LeibnizAlgebra(qd);
    for (std::size_t a = 0; a < qd; ++a)
        for (std::size_t b = 0; b < qd; ++b) {
            const auto img = q.projection * g.bracket_basis(q.complement[a], q.complement[b]);
            for (std::size_t k = 0; k < qd; ++k) q.algebra.c(a, b, k) = img[k];
        }
    if (!is_lie(q.algebra)) throw InternalError("quotient: g/Z(g) is not antisymmetric");
    return q;
}

}  // namespace leibniz
