#include "leibniz/lie2.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {
namespace {

const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);

Vector to_vector(std::span<const Rational> s) { return Vector(s.begin(), s.end()); }

Vector bilinear(const MultilinearMap& m, const Vector& x, const Vector& y) {
    const std::array<Vector, 2> args{x, y};
    return m.apply(args);
}

Vector trilinear(const MultilinearMap& m, const Vector& x, const Vector& y, const Vector& z) {
    const std::array<Vector, 3> args{x, y, z};
    return m.apply(args);
}

// J on basis triples, via the closed form, as an n x n x n -> n tensor.
MultilinearMap jacobiator_table(const LeibnizAlgebra& g) {
    const std::size_t n = g.dim();
    MultilinearMap table({n, n, n}, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const std::array<std::size_t, 3> idx{i, j, k};
                table.set(idx, jacobiator_closed(g, unit_vector(n, i), unit_vector(n, j), unit_vector(n, k)));
            }
    return table;
}

}  // namespace

MultilinearMap skew_bracket(const LeibnizAlgebra& g) {
    const std::size_t n = g.dim();
    MultilinearMap s({n, n}, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto out = s.at({i, j});
            for (std::size_t k = 0; k < n; ++k) out[k] = kHalf * (g.c(i, j, k) - g.c(j, i, k));
        }
    return s;
}

Vector jacobiator_direct(const LeibnizAlgebra& g, const Vector& x, const Vector& y, const Vector& z) {
    if (x.size() != g.dim() || y.size() != g.dim() || z.size() != g.dim())
        throw InputError("jacobiator_direct: dimension mismatch");
    const auto s = skew_bracket(g);
    Vector out = bilinear(s, x, bilinear(s, y, z));
    axpy(out, 1, bilinear(s, y, bilinear(s, z, x)));
    axpy(out, 1, bilinear(s, z, bilinear(s, x, y)));
    return out;
}

Vector jacobiator_closed(const LeibnizAlgebra& g, const Vector& x, const Vector& y, const Vector& z) {
    if (x.size() != g.dim() || y.size() != g.dim() || z.size() != g.dim())
        throw InputError("jacobiator_closed: dimension mismatch");
    Vector out = g.bracket(g.bracket(z, y), x);
    axpy(out, 1, g.bracket(g.bracket(x, z), y));
    axpy(out, 1, g.bracket(g.bracket(y, x), z));
    return kQuarter * out;
}

IdentityReport check_jacobiator_identities(const LeibnizAlgebra& g) {
    const std::size_t n = g.dim();
    const auto s = skew_bracket(g);
    const auto jac = jacobiator_table(g);
    IdentityReport report;

    auto e = [n](std::size_t i) { return unit_vector(n, i); };
    auto J = [&](std::size_t i, std::size_t j, std::size_t k) { return to_vector(jac.at({i, j, k})); };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector direct = bilinear(s, e(i), to_vector(s.at({j, k})));
                axpy(direct, 1, bilinear(s, e(j), to_vector(s.at({k, i}))));
                axpy(direct, 1, bilinear(s, e(k), to_vector(s.at({i, j}))));
                report.expect_zero("closed-form", {i, j, k}, direct - J(i, j, k));
                report.expect_zero("antisymmetry", {i, j, k}, J(i, j, k) + J(j, i, k));
                report.expect_zero("antisymmetry", {i, j, k}, J(i, j, k) + J(i, k, j));
                for (std::size_t l = 0; l < n; ++l) {
                    report.expect_zero("left-center", {i, j, k, l}, g.bracket(J(i, j, k), e(l)));
                }
            }

    // J(⟦e_a, e_b⟧, e_c, e_d) by linearity in the first slot.
    auto J_of_skew = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
        return trilinear(jac, to_vector(s.at({a, b})), e(c), e(d));
    };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t w = 0; w < n; ++w) {
                    Vector t = bilinear(s, e(x), J(y, z, w));
                    axpy(t, -1, bilinear(s, e(y), J(x, z, w)));
                    axpy(t, 1, bilinear(s, e(z), J(x, y, w)));
                    axpy(t, -1, bilinear(s, e(w), J(x, y, z)));
                    axpy(t, -1, J_of_skew(x, y, z, w));
                    axpy(t, 1, J_of_skew(x, z, y, w));
                    axpy(t, -1, J_of_skew(x, w, y, z));
                    axpy(t, -1, J_of_skew(y, z, x, w));
                    axpy(t, 1, J_of_skew(y, w, x, z));
                    axpy(t, -1, J_of_skew(z, w, x, y));
                    report.expect_zero("ten-term", {x, y, z, w}, std::move(t));
                }
    return report;
}

Lie2Algebra Lie2Algebra::zero(std::size_t dim1, std::size_t dim0) {
    Lie2Algebra L;
    L.dim1 = dim1;
    L.dim0 = dim0;
    L.l1 = Matrix(dim0, dim1);
    L.l2_00 = MultilinearMap({dim0, dim0}, dim0);
    L.l2_01 = MultilinearMap({dim0, dim1}, dim1);
    L.l2_11 = MultilinearMap({dim1, dim1}, dim1);
    L.l3 = MultilinearMap({dim0, dim0, dim0}, dim1);
    return L;
}

Lie2Algebra Lie2Algebra::from_lie(const LeibnizAlgebra& g) {
    if (!is_lie(g)) throw InputError("Lie2Algebra::from_lie: bracket is not antisymmetric");
    Lie2Algebra L = zero(0, g.dim());
    L.l2_00 = skew_bracket(g);
    return L;
}

IdentityReport lie2_shape_check(const Lie2Algebra& L) {
    IdentityReport report;
    const std::size_t n = L.dim0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            report.expect_zero("l2-antisymmetry", {i, j},
                               to_vector(L.l2_00.at({i, j})) + to_vector(L.l2_00.at({j, i})));
            for (std::size_t k = 0; k < n; ++k) {
                const auto v = to_vector(L.l3.at({i, j, k}));
                report.expect_zero("l3-antisymmetry", {i, j, k}, v + to_vector(L.l3.at({j, i, k})));
                report.expect_zero("l3-antisymmetry", {i, j, k}, v + to_vector(L.l3.at({i, k, j})));
            }
        }
    return report;
}

Lie2Algebra build_lie2(const LeibnizAlgebra& g) {
    const std::size_t n = g.dim();
    const Subspace z = left_center(g);
    const CoordinateMap center_coords(z);
    Lie2Algebra L = Lie2Algebra::zero(z.dim(), n);

    L.l1 = z.basis_matrix();
    L.l2_00 = skew_bracket(g);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < z.dim(); ++b) {
            const auto v = center_coords(kHalf * g.bracket(unit_vector(n, i), z.basis()[b]));
            if (!v) throw CheckFailure("build_lie2: [e_" + std::to_string(i) + ", c] escapes Z(g)");
            const std::array<std::size_t, 2> idx{i, b};
            L.l2_01.set(idx, *v);
        }
    const auto jac = jacobiator_table(g);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const auto v = center_coords(to_vector(jac.at({i, j, k})));
                if (!v) {
                    throw CheckFailure("build_lie2: Jacobiator at (" + std::to_string(i) + "," +
                                       std::to_string(j) + "," + std::to_string(k) +
                                       ") is not in the left center; input is not Leibniz");
                }
                const std::array<std::size_t, 3> idx{i, j, k};
                L.l3.set(idx, *v);
            }
    return L;
}

AxiomReport verify_lie2(const Lie2Algebra& L) {
    const std::size_t n0 = L.dim0;
    const std::size_t n1 = L.dim1;
    AxiomReport report;
    auto e0 = [n0](std::size_t i) { return unit_vector(n0, i); };
    auto e1 = [n1](std::size_t i) { return unit_vector(n1, i); };

    // l2 restricted by degree; g1-valued results are g1 coordinates.
    auto l2_00 = [&](const Vector& x, const Vector& y) { return bilinear(L.l2_00, x, y); };
    auto l2_01 = [&](const Vector& x, const Vector& a) { return bilinear(L.l2_01, x, a); };
    auto l1 = [&](const Vector& a) { return L.l1 * a; };
    auto l3 = [&](const Vector& x, const Vector& y, const Vector& z) { return trilinear(L.l3, x, y, z); };

    for (std::size_t x = 0; x < n0; ++x)
        for (std::size_t a = 0; a < n1; ++a)
            report.axioms[0].expect_zero("(a)", {x, a}, l1(l2_01(e0(x), e1(a))) - l2_00(e0(x), l1(e1(a))));

    for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = 0; b < n1; ++b)
            report.axioms[1].expect_zero("(b)", {a, b},
                                         l2_01(l1(e1(a)), e1(b)) + l2_01(l1(e1(b)), e1(a)));

    for (std::size_t x = 0; x < n0; ++x)
        for (std::size_t y = 0; y < n0; ++y)
            for (std::size_t z = 0; z < n0; ++z) {
                Vector lhs = l2_00(e0(x), l2_00(e0(y), e0(z)));
                axpy(lhs, 1, l2_00(e0(y), l2_00(e0(z), e0(x))));
                axpy(lhs, 1, l2_00(e0(z), l2_00(e0(x), e0(y))));
                report.axioms[2].expect_zero("(c)", {x, y, z}, lhs - l1(l3(e0(x), e0(y), e0(z))));
            }

    for (std::size_t x = 0; x < n0; ++x)
        for (std::size_t y = 0; y < n0; ++y)
            for (std::size_t a = 0; a < n1; ++a) {
                // l2(x,l2(y,a)) + l2(y,l2(a,x)) + l2(a,l2(x,y)), with l2(a, .) = -l2_01(., a).
                Vector lhs = l2_01(e0(x), l2_01(e0(y), e1(a)));
                axpy(lhs, -1, l2_01(e0(y), l2_01(e0(x), e1(a))));
                axpy(lhs, -1, l2_01(l2_00(e0(x), e0(y)), e1(a)));
                report.axioms[3].expect_zero("(d)", {x, y, a}, lhs - l3(e0(x), e0(y), l1(e1(a))));
            }

    for (std::size_t x = 0; x < n0; ++x)
        for (std::size_t y = 0; y < n0; ++y)
            for (std::size_t z = 0; z < n0; ++z)
                for (std::size_t w = 0; w < n0; ++w) {
                    const Vector X = e0(x), Y = e0(y), Z = e0(z), W = e0(w);
                    Vector t = l2_01(X, l3(Y, Z, W));
                    axpy(t, -1, l2_01(Y, l3(X, Z, W)));
                    axpy(t, 1, l2_01(Z, l3(X, Y, W)));
                    axpy(t, -1, l2_01(W, l3(X, Y, Z)));
                    axpy(t, -1, l3(l2_00(X, Y), Z, W));
                    axpy(t, 1, l3(l2_00(X, Z), Y, W));
                    axpy(t, -1, l3(l2_00(X, W), Y, Z));
                    axpy(t, -1, l3(l2_00(Y, Z), X, W));
                    axpy(t, 1, l3(l2_00(Y, W), X, Z));
                    axpy(t, -1, l3(l2_00(Z, W), X, Y));
                    report.axioms[4].expect_zero("(e)", {x, y, z, w}, std::move(t));
                }
    return report;
}

}  // namespace leibniz
