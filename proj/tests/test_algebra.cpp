#include <gtest/gtest.h>

#include "leibniz/algebra.hpp"
#include "leibniz/errors.hpp"
#include "support.hpp"

using namespace leibniz;
using namespace testing_support;

namespace {

LeibnizAlgebra square_is_itself() {
    LeibnizAlgebra g(1);
    g.c(0, 0, 0) = 1;
    return g;
}

// Left center by brute force: x is central iff [x, e_j] = 0 for every j,
// solved one coordinate condition at a time via the stacked matrix built
// independently of the library routine.
Subspace center_oracle(const LeibnizAlgebra& g) {
    const std::size_t n = g.dim();
    Matrix m(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector v = g.bracket(unit_vector(n, i), unit_vector(n, j));
            for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = v[k];
        }
    return kernel_basis(m);
}

}  // namespace

TEST(Bracket, AbelianIsZero) {
    const auto g = fixture("abelian3");
    EXPECT_TRUE(is_zero(g.bracket(vec({1, 2, 3}), vec({-1, Rational(1, 2), 4}))));
}

TEST(Bracket, ReadsStructureConstants) {
    EXPECT_EQ(fixture("L2").bracket(vec({1, 0}), vec({1, 0})), vec({0, 1}));
    EXPECT_EQ(fixture("heis3").bracket(vec({0, 1, 0}), vec({1, 0, 0})), vec({0, 0, -1}));
}

TEST(Bracket, IsBilinear) {
    const auto g = fixture("omni2");
    std::mt19937 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        Vector x(6), y(6), z(6);
        for (auto* v : {&x, &y, &z})
            for (auto& q : *v) q = random_rational(rng);
        const Rational a = random_rational(rng);
        ASSERT_EQ(g.bracket(x + a * y, z), g.bracket(x, z) + a * g.bracket(y, z));
        ASSERT_EQ(g.bracket(z, x + a * y), g.bracket(z, x) + a * g.bracket(z, y));
    }
}

TEST(Bracket, DimensionMismatch) {
    EXPECT_THROW(fixture("L2").bracket(vec({1}), vec({1, 0})), InputError);
}

TEST(CheckLeibniz, PositiveFixturesPass) {
    for (const auto& name : positive_fixtures()) EXPECT_TRUE(check_leibniz(fixture(name)).holds()) << name;
}

TEST(CheckLeibniz, SquareIsItselfFailsAtOrigin) {
    const auto report = check_leibniz(square_is_itself());
    ASSERT_FALSE(report.holds());
    EXPECT_EQ(report.witnesses().front().indices, (std::vector<std::size_t>{0, 0, 0}));
    // [e1,[e1,e1]] - [[e1,e1],e1] - [e1,[e1,e1]] = -e1
    EXPECT_EQ(report.witnesses().front().defect, vec({-1}));
    EXPECT_FALSE(check_leibniz(fixture("negative/nonleibniz_square")).holds());
}

TEST(CheckLeibniz, ZeroDimensional) {
    const LeibnizAlgebra g(0);
    EXPECT_TRUE(check_leibniz(g).holds());
    EXPECT_EQ(left_center(g).dim(), 0u);
    EXPECT_TRUE(is_lie(g));
    EXPECT_EQ(quotient_by_left_center(g).algebra.dim(), 0u);
}

TEST(LeftCenter, Examples) {
    EXPECT_EQ(left_center(fixture("abelian3")).dim(), 3u);
    const Subspace z = left_center(fixture("L2"));
    EXPECT_EQ(z.dim(), 1u);
    EXPECT_TRUE(z.contains(vec({0, 1})));
    EXPECT_EQ(left_center(fixture("sl2")).dim(), 0u);
    EXPECT_EQ(left_center(fixture("omni2")).dim(), 2u);
}

TEST(LeftCenter, MatchesOracleOnFixtures) {
    for (const auto& name : positive_fixtures()) {
        const auto g = fixture(name);
        EXPECT_TRUE(same_subspace(left_center(g), center_oracle(g))) << name;
    }
}

TEST(DerivedSubalgebra, Examples) {
    EXPECT_EQ(derived_subalgebra(fixture("abelian2")).dim(), 0u);
    const Subspace d = derived_subalgebra(fixture("L2"));
    EXPECT_EQ(d.dim(), 1u);
    EXPECT_TRUE(d.contains(vec({0, 1})));
    EXPECT_EQ(derived_subalgebra(fixture("sl2")).dim(), 3u);
}

TEST(IsLie, Examples) {
    EXPECT_TRUE(is_lie(fixture("heis3")));
    EXPECT_FALSE(is_lie(fixture("L2")));
    EXPECT_TRUE(is_lie(fixture("abelian2")));
    EXPECT_TRUE(is_lie(fixture("sl2")));
    EXPECT_FALSE(is_lie(fixture("omni2")));
}

TEST(SquareInCenter, HoldsOnAllFixtures) {
    for (const auto& name : positive_fixtures()) EXPECT_TRUE(square_in_center_check(fixture(name)).holds()) << name;
}

TEST(SquareInCenter, SquaresOfRandomElementsAreCentral) {
    std::mt19937 rng(2);
    for (const auto& name : positive_fixtures()) {
        const auto g = fixture(name);
        const Subspace z = left_center(g);
        for (int trial = 0; trial < 5; ++trial) {
            Vector x(g.dim());
            for (auto& q : x) q = random_rational(rng);
            ASSERT_TRUE(z.contains(g.bracket(x, x))) << name;
        }
    }
}

TEST(LeftCenter, IsAnIdeal) {
    for (const auto& name : positive_fixtures()) EXPECT_TRUE(left_center_ideal_check(fixture(name)).holds()) << name;
}

TEST(Quotient, Examples) {
    EXPECT_EQ(quotient_by_left_center(fixture("abelian2")).algebra.dim(), 0u);

    const auto q = quotient_by_left_center(fixture("L2"));
    EXPECT_EQ(q.algebra.dim(), 1u);
    EXPECT_TRUE(is_zero(q.algebra.constants()));
    EXPECT_EQ(q.projection, mat({{1, 0}}));

    const auto s = quotient_by_left_center(fixture("sl2"));
    EXPECT_EQ(s.algebra, fixture("sl2"));
}

TEST(Quotient, AlwaysLieAndProjectionIsHomomorphism) {
    for (const auto& name : positive_fixtures()) {
        const auto g = fixture(name);
        const auto q = quotient_by_left_center(g);
        ASSERT_TRUE(is_lie(q.algebra)) << name;
        ASSERT_TRUE(check_leibniz(q.algebra).holds()) << name;
        ASSERT_EQ(q.algebra.dim() + left_center(g).dim(), g.dim());
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (std::size_t j = 0; j < g.dim(); ++j) {
                const Vector lhs = q.projection * g.bracket_basis(i, j);
                const Vector rhs = q.algebra.bracket(q.projection.column(i), q.projection.column(j));
                ASSERT_EQ(lhs, rhs) << name;
            }
    }
}

TEST(Multiplication, MatricesMatchBracket) {
    const auto g = fixture("omni2");
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) {
            ASSERT_EQ(g.left_multiplication(i).column(j), Vector(g.bracket_basis(i, j).begin(), g.bracket_basis(i, j).end()));
            ASSERT_EQ(g.right_multiplication(i).column(j), Vector(g.bracket_basis(j, i).begin(), g.bracket_basis(j, i).end()));
        }
}
