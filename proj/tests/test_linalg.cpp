#include <gtest/gtest.h>

#include "leibniz/errors.hpp"
#include "leibniz/linalg.hpp"
#include "support.hpp"

using namespace leibniz;
using namespace testing_support;

namespace {

// Textbook Gauss-Jordan over the rationals, used as an oracle for rref.
RrefResult gauss_jordan(Matrix m) {
    RrefResult out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const Rational piv = m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) /= piv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = m;
    return out;
}

}  // namespace

TEST(Rational, ParseAndFormat) {
    EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-4"), Rational(-4));
    EXPECT_EQ(parse_rational("+2/3"), Rational(2, 3));
    EXPECT_EQ(format_rational(Rational(-6, 4)), "-3/2");
    EXPECT_EQ(format_rational(Rational(5)), "5");
    EXPECT_THROW(parse_rational("1/0"), InputError);
    EXPECT_THROW(parse_rational("1/-2"), InputError);
    EXPECT_THROW(parse_rational("0.5"), InputError);
    EXPECT_THROW(parse_rational(""), InputError);
}

TEST(Rational, StaysCanonical) {
    Rational a(1, 6), b(1, 3);
    const Rational s = a + b;
    EXPECT_EQ(s.get_num(), 1);
    EXPECT_EQ(s.get_den(), 2);
    const Rational p = Rational(-2, 3) * Rational(3, 4);
    EXPECT_EQ(p.get_num(), -1);
    EXPECT_EQ(p.get_den(), 2);
}

TEST(Rref, IdentityIsFixed) {
    const auto r = rref(Matrix::identity(2));
    EXPECT_EQ(r.reduced, Matrix::identity(2));
    EXPECT_EQ(r.rank, 2u);
    EXPECT_EQ(r.pivot_columns, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, ZeroMatrix) {
    const auto r = rref(Matrix(3, 3));
    EXPECT_TRUE(r.reduced.is_zero());
    EXPECT_EQ(r.rank, 0u);
    EXPECT_TRUE(r.pivot_columns.empty());
}

TEST(Rref, ProportionalRows) {
    const auto r = rref(mat({{1, 2}, {2, 4}}));
    EXPECT_EQ(r.reduced, mat({{1, 2}, {0, 0}}));
    EXPECT_EQ(r.rank, 1u);
}

TEST(Rref, MatchesGaussJordanOracle) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        const Matrix m = random_matrix(rng, rows, cols);
        const auto fast = rref(m);
        const auto slow = gauss_jordan(m);
        ASSERT_EQ(fast.reduced, slow.reduced);
        ASSERT_EQ(fast.rank, slow.rank);
        ASSERT_EQ(fast.pivot_columns, slow.pivot_columns);
        ASSERT_EQ(rank(m), slow.rank);
    }
}

TEST(Rref, Idempotent) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Matrix m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5);
        const Matrix once = rref(m).reduced;
        ASSERT_EQ(rref(once).reduced, once);
    }
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank(Matrix::identity(4)), 4u);
    EXPECT_EQ(rank(Matrix(3, 5)), 0u);
    EXPECT_EQ(rank(mat({{1, 2}, {2, 4}, {3, 6}})), 1u);
    EXPECT_EQ(rank(Matrix(0, 3)), 0u);
}

TEST(Rank, LargeEntriesStayExact) {
    // Hilbert matrix: full rank, famously ill-conditioned.
    const std::size_t n = 8;
    Matrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = Rational(1, static_cast<unsigned long>(i + j + 1));
    EXPECT_EQ(rank(h), n);
    EXPECT_EQ(rref(h).reduced, Matrix::identity(n));
}

TEST(Kernel, Examples) {
    EXPECT_EQ(kernel_basis(Matrix(2, 3)).dim(), 3u);
    EXPECT_EQ(kernel_basis(Matrix::identity(2)).dim(), 0u);
    const Subspace k = kernel_basis(mat({{1, 1, 0}}));
    EXPECT_EQ(k.dim(), 2u);
    EXPECT_TRUE(k.contains(vec({1, -1, 0})));
}

TEST(Kernel, RankNullity) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Matrix m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6);
        const Subspace k = kernel_basis(m);
        ASSERT_EQ(rank(m) + k.dim(), m.cols());
        for (const auto& v : k.basis()) ASSERT_TRUE(is_zero(m * v));
    }
}

TEST(Solve, Examples) {
    const Vector b = vec({3, Rational(-1, 2)});
    EXPECT_EQ(solve(Matrix::identity(2), b), b);
    EXPECT_FALSE(solve(Matrix(2, 2), vec({1, 0})).has_value());
    EXPECT_EQ(solve(mat({{2, 0}, {0, 4}}), vec({1, 1})), vec({Rational(1, 2), Rational(1, 4)}));
    EXPECT_THROW(solve(Matrix::identity(2), vec({1})), InputError);
}

TEST(Solve, ConsistentSystemsAreSolved) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        const Matrix m = random_matrix(rng, rows, cols);
        Vector x(cols);
        for (auto& q : x) q = random_rational(rng);
        const Vector b = m * x;
        const auto y = solve(m, b);
        ASSERT_TRUE(y.has_value());
        ASSERT_EQ(m * *y, b);
    }
}

TEST(Subspace, RejectsDependentBasis) {
    EXPECT_THROW(Subspace(2, {vec({1, 2}), vec({2, 4})}), InputError);
}

TEST(Subspace, CoordinateMapRoundTrip) {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix m = random_matrix(rng, 1 + rng() % 4, 5);
        std::vector<Vector> rows;
        for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
        const Subspace s = Subspace::span_of(5, rows);
        const CoordinateMap coords(s);
        for (const auto& v : rows) {
            const auto c = coords(v);
            ASSERT_TRUE(c.has_value());
            ASSERT_EQ(s.basis_matrix() * *c, v);
        }
        if (s.dim() < 5) {
            const Subspace perp = kernel_basis(Matrix::from_rows(s.basis(), 5));
            ASSERT_FALSE(coords(perp.basis().front()).has_value());
        }
    }
}
