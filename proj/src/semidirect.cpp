#include "leibniz/semidirect.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/graded_bracket.hpp"

namespace leibniz {

LeibnizAlgebra semidirect(const Representation& rep, SemidirectMode mode) {
    if (const auto leib = check_leibniz(rep.algebra); !leib.holds())
        throw CheckFailure("semidirect: algebra is not Leibniz: " + describe(leib.witnesses().front()));
    if (const auto valid = check_representation(rep); !valid.holds())
        throw CheckFailure("semidirect: not a representation: " + describe(valid.witnesses().front()));
    const auto& g = rep.algebra;
    const std::size_t n = g.dim();
    const std::size_t m = rep.vdim;
    LeibnizAlgebra h(n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) h.c(i, j, k) = g.c(i, j, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t a = 0; a < m; ++a) {
                h.c(i, n + b, n + a) = rep.l[i](a, b);
                if (mode == SemidirectMode::LeftRight) h.c(n + b, i, n + a) = rep.r[i](a, b);
            }
    const auto report = check_leibniz(h);
    if (!report.holds())
        throw InternalError("semidirect product is not Leibniz: " + describe(report.witnesses().front()));
    return h;
}

Cochain rbar(const Representation& rep) {
    rep.validate_shape();
    const std::size_t n = rep.algebra.dim();
    const std::size_t m = rep.vdim;
    const std::size_t d = n + m;
    Cochain c(2, d, d);
    for (std::size_t b = 0; b < m; ++b)
        for (std::size_t j = 0; j < n; ++j) {
            const std::array<std::size_t, 2> idx{n + b, j};
            auto val = c.value(idx);
            for (std::size_t a = 0; a < m; ++a) val[n + a] = rep.r[j](a, b);
        }
    return c;
}

IdentityReport maurer_cartan_check(const Representation& rep) {
    const LeibnizAlgebra h0 = semidirect(rep, SemidirectMode::LeftOnly);
    const LeibnizAlgebra hlr = semidirect(rep, SemidirectMode::LeftRight);
    const Cochain r = rbar(rep);
    const std::size_t d = h0.dim();

    const Cochain defect =
        coboundary(adjoint_rep(h0), r, tuple_count(d, 3) * d) - Rational(1, 2) * graded_bracket(r, r);

    IdentityReport report;
    std::array<std::size_t, 3> t{};
    for (std::size_t ti = 0; ti < tuple_count(d, 3); ++ti) {
        decode_tuple(ti, d, t);
        const auto v = defect.value_at(ti);
        if (!is_zero(v)) report.add("maurer-cartan", {t[0], t[1], t[2]}, Vector(v.begin(), v.end()));
    }
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const std::array<std::size_t, 2> idx{a, b};
            const auto lr = hlr.bracket_basis(a, b);
            const auto l0 = h0.bracket_basis(a, b);
            const auto rv = r.value(idx);
            Vector diff(d);
            for (std::size_t k = 0; k < d; ++k) diff[k] = lr[k] - l0[k] - rv[k];
            report.expect_zero("deformation", {a, b}, std::move(diff));
        }
    return report;
}

}  // namespace leibniz
