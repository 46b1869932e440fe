#include "leibniz/omni.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

std::size_t omni_dim(std::size_t m) { return m * m + m; }

Vector omni_element(const Matrix& a, std::span<const Rational> u) {
    Vector x = flatten(a);
    x.insert(x.end(), u.begin(), u.end());
    return x;
}

Matrix omni_matrix_part(std::span<const Rational> x, std::size_t m) {
    if (x.size() != omni_dim(m)) throw InputError("omni element has wrong length");
    return unflatten(x.first(m * m), m, m);
}

Vector omni_vector_part(std::span<const Rational> x, std::size_t m) {
    if (x.size() != omni_dim(m)) throw InputError("omni element has wrong length");
    const auto v = x.subspan(m * m);
    return Vector(v.begin(), v.end());
}

Vector omni_bracket(std::span<const Rational> x, std::span<const Rational> y, std::size_t m) {
    const Matrix a = omni_matrix_part(x, m);
    const Matrix b = omni_matrix_part(y, m);
    return omni_element(commutator(a, b), a * omni_vector_part(y, m));
}

LeibnizAlgebra omni_lie_unchecked(std::size_t m) {
    const std::size_t mm = m * m;
    LeibnizAlgebra ol(omni_dim(m));
    auto E = [m](std::size_t a, std::size_t b) { return a * m + b; };
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            // [E_ab, E_cd] = δ_bc E_ad - δ_da E_cb
            for (std::size_t d = 0; d < m; ++d) {
                ol.c(E(a, b), E(b, d), E(a, d)) += 1;
                ol.c(E(a, b), E(d, a), E(d, b)) -= 1;
            }
            // E_ab e_b = e_a
            ol.c(E(a, b), mm + b, mm + a) += 1;
        }
    return ol;
}

LeibnizAlgebra omni_lie(std::size_t m) {
    LeibnizAlgebra ol = omni_lie_unchecked(m);
    const auto report = check_leibniz(ol);
    if (!report.holds()) throw InternalError("omni_lie: bracket failed the Leibniz identity");
    return ol;
}

Matrix GraphMap::at(std::span<const Rational> u) const { return linear_combination(phi, u, vdim, vdim); }

void GraphMap::validate_shape() const {
    if (phi.size() != vdim) throw InputError("graph map: expected one matrix per basis vector of V");
    for (const auto& p : phi)
        if (p.rows() != vdim || p.cols() != vdim) throw InputError("graph map: matrices must be m x m");
}

IdentityReport graph_check(const GraphMap& phi) {
    phi.validate_shape();
    IdentityReport report;
    for (std::size_t i = 0; i < phi.vdim; ++i)
        for (std::size_t j = 0; j < phi.vdim; ++j) {
            const Matrix lhs = commutator(phi.phi[i], phi.phi[j]);
            const Matrix rhs = phi.at(phi.phi[i].column(j));
            report.expect_zero("graph", {i, j}, flatten(lhs - rhs));
        }
    return report;
}

LeibnizAlgebra induced_leibniz(const GraphMap& phi) {
    if (const auto report = graph_check(phi); !report.holds())
        throw CheckFailure("induced_leibniz: graph is not a subalgebra: " + describe(report.witnesses().front()));
    const std::size_t m = phi.vdim;
    LeibnizAlgebra g(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) g.c(i, j, k) = phi.phi[i](k, j);
    if (!check_leibniz(g).holds()) throw InternalError("induced_leibniz: result is not Leibniz");
    return g;
}

GraphMap left_multiplication_map(const LeibnizAlgebra& g) {
    GraphMap phi{g.dim(), {}};
    for (std::size_t i = 0; i < g.dim(); ++i) phi.phi.push_back(g.left_multiplication(i));
    return phi;
}

}  // namespace leibniz
