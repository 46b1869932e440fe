#include "leibniz/representation.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

Matrix Representation::left(std::span<const Rational> x) const {
    return linear_combination(l, x, vdim, vdim);
}

Matrix Representation::right(std::span<const Rational> x) const {
    return linear_combination(r, x, vdim, vdim);
}

void Representation::validate_shape() const {
    const std::size_t n = algebra.dim();
    if (l.size() != n || r.size() != n)
        throw InputError("representation: expected " + std::to_string(n) + " matrices in l and r");
    for (const auto* family : {&l, &r})
        for (const auto& m : *family)
            if (m.rows() != vdim || m.cols() != vdim)
                throw InputError("representation: action matrices must be " + std::to_string(vdim) +
                                 "x" + std::to_string(vdim));
}

bool Representation::has_zero_right_action() const {
    for (const auto& m : r)
        if (!m.is_zero()) return false;
    return true;
}

IdentityReport check_representation(const Representation& rep) {
    rep.validate_shape();
    const auto& g = rep.algebra;
    const std::size_t n = g.dim();
    IdentityReport report;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto xy = g.bracket_basis(i, j);
            report.expect_zero("l-bracket", {i, j},
                               flatten(rep.left(xy) - commutator(rep.l[i], rep.l[j])));
            report.expect_zero("r-bracket", {i, j},
                               flatten(rep.right(xy) - commutator(rep.l[i], rep.r[j])));
            report.expect_zero("r-l", {i, j}, flatten(rep.r[j] * rep.l[i] + rep.r[j] * rep.r[i]));
        }
    return report;
}

Representation trivial_rep(const LeibnizAlgebra& g) {
    return {g, 1, std::vector<Matrix>(g.dim(), Matrix(1, 1)), std::vector<Matrix>(g.dim(), Matrix(1, 1))};
}

Representation adjoint_rep(const LeibnizAlgebra& g) {
    Representation rep{g, g.dim(), {}, {}};
    for (std::size_t i = 0; i < g.dim(); ++i) {
        rep.l.push_back(g.left_multiplication(i));
        rep.r.push_back(g.right_multiplication(i));
    }
    return rep;
}

Representation without_right_action(const Representation& rep) {
    Representation out = rep;
    for (auto& m : out.r) m = Matrix(rep.vdim, rep.vdim);
    return out;
}

Representation dual_rep(const Representation& rep) {
    rep.validate_shape();
    if (!rep.has_zero_right_action()) throw InputError("dual_rep: only (V, l, 0) can be dualized");
    Representation out = rep;
    for (auto& m : out.l) m = -m.transpose();
    return out;
}

Matrix commutator_action(const Matrix& l) {
    const std::size_t m = l.rows();
    // (lA - Al)_{ab} = Σ_c l_{ac} A_{cb} - Σ_d A_{ad} l_{db}.
    Matrix out(m * m, m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            for (std::size_t c = 0; c < m; ++c) out(a * m + b, c * m + b) += l(a, c);
            for (std::size_t d = 0; d < m; ++d) out(a * m + b, a * m + d) -= l(d, b);
        }
    return out;
}

Representation conjugation_rep(const Representation& rep) {
    rep.validate_shape();
    if (!rep.has_zero_right_action())
        throw InputError("conjugation_rep: requires a representation with zero right action");
    const std::size_t mm = rep.vdim * rep.vdim;
    Representation out{rep.algebra, mm, {}, std::vector<Matrix>(rep.algebra.dim(), Matrix(mm, mm))};
    for (const auto& li : rep.l) out.l.push_back(commutator_action(li));
    return out;
}

}  // namespace leibniz
