#include "leibniz/naive.hpp"

#include <algorithm>

#include "leibniz/errors.hpp"

namespace leibniz {
namespace {

int sign_of(std::size_t exponent) { return exponent % 2 == 0 ? 1 : -1; }

std::vector<Vector> rho_vectors(std::size_t n, std::size_t m, const std::vector<Matrix>& phi,
                                const std::vector<Vector>& theta) {
    if (phi.size() != n || theta.size() != n)
        throw InputError("naive representation: expected one (phi, theta) pair per basis vector");
    std::vector<Vector> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (phi[i].rows() != m || phi[i].cols() != m || theta[i].size() != m)
            throw InputError("naive representation: phi must be m x m and theta of length m");
        out.push_back(omni_element(phi[i], theta[i]));
    }
    return out;
}

}  // namespace

NaiveRepresentation::NaiveRepresentation(LeibnizAlgebra g, std::size_t vdim, std::vector<Matrix> phi,
                                         std::vector<Vector> theta)
    : algebra_(std::move(g)),
      vdim_(vdim),
      phi_(std::move(phi)),
      theta_(std::move(theta)),
      rho_(rho_vectors(algebra_.dim(), vdim_, phi_, theta_)),
      image_(Subspace::span_of(omni_dim(vdim_), rho_)),
      image_coords_(image_) {}

Vector NaiveRepresentation::rho(std::span<const Rational> x) const {
    if (x.size() != algebra_.dim()) throw InputError("rho: dimension mismatch");
    Vector out(ambient_dim());
    for (std::size_t i = 0; i < x.size(); ++i) axpy(out, x[i], rho_[i]);
    return out;
}

Vector NaiveRepresentation::embed(std::span<const Rational> image_coords) const {
    if (image_coords.size() != image_.dim()) throw InputError("embed: wrong number of image coordinates");
    Vector out(ambient_dim());
    for (std::size_t b = 0; b < image_.dim(); ++b) axpy(out, image_coords[b], image_.basis()[b]);
    return out;
}

IdentityReport naive_homomorphism_check(const NaiveRepresentation& rho) {
    const auto& g = rho.algebra();
    const LeibnizAlgebra ol = omni_lie_unchecked(rho.vdim());
    IdentityReport report;
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j)
            report.expect_zero("homomorphism", {i, j},
                               rho.rho(g.bracket_basis(i, j)) - ol.bracket(rho.rho(i), rho.rho(j)));
    return report;
}

IdentityReport naive_check(const NaiveRepresentation& rho) {
    const auto& g = rho.algebra();
    const std::size_t m = rho.vdim();
    IdentityReport report;
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) {
            const auto xy = g.bracket_basis(i, j);
            const Matrix phi_xy = linear_combination(rho.phi(), xy, m, m);
            report.expect_zero("con1", {i, j}, flatten(phi_xy - commutator(rho.phi()[i], rho.phi()[j])));
            Vector theta_xy(m);
            for (std::size_t k = 0; k < xy.size(); ++k) axpy(theta_xy, xy[k], rho.theta()[k]);
            report.expect_zero("con2", {i, j}, theta_xy - rho.phi()[i] * rho.theta()[j]);
        }
    if (report.holds() != naive_homomorphism_check(rho).holds())
        throw InternalError("naive_check: component conditions and homomorphism test disagree");
    return report;
}

Subspace trivial_naive_space(const LeibnizAlgebra& g) {
    const Subspace derived = derived_subalgebra(g);
    return kernel_basis(Matrix::from_rows(derived.basis(), g.dim()));
}

NaiveRepresentation trivial_naive(const LeibnizAlgebra& g, const Vector& xi) {
    if (xi.size() != g.dim()) throw InputError("trivial_naive: xi has wrong length");
    std::vector<Vector> theta;
    for (const auto& q : xi) theta.push_back(Vector{q});
    return NaiveRepresentation(g, 1, std::vector<Matrix>(g.dim(), Matrix(1, 1)), std::move(theta));
}

NaiveRepresentation adjoint_naive(const LeibnizAlgebra& g) {
    std::vector<Matrix> phi;
    std::vector<Vector> theta;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        phi.push_back(g.left_multiplication(i));
        theta.push_back(unit_vector(g.dim(), i));
    }
    NaiveRepresentation rho(g, g.dim(), std::move(phi), std::move(theta));
    if (const auto report = naive_check(rho); !report.holds())
        throw CheckFailure("adjoint_naive: " + describe(report.witnesses().front()));
    return rho;
}

NaiveRepresentation naive_from_rep(const Representation& rep) {
    if (const auto valid = check_representation(rep); !valid.holds())
        throw CheckFailure("naive_from_rep: not a representation: " + describe(valid.witnesses().front()));
    std::vector<Matrix> phi;
    std::vector<Vector> theta;
    for (std::size_t i = 0; i < rep.algebra.dim(); ++i) {
        phi.push_back(commutator_action(rep.l[i]));
        theta.push_back(flatten(rep.r[i]));
    }
    NaiveRepresentation rho(rep.algebra, rep.vdim * rep.vdim, std::move(phi), std::move(theta));
    if (const auto report = naive_check(rho); !report.holds())
        throw InternalError("naive_from_rep: result is not a naive representation: " +
                            describe(report.witnesses().front()));
    return rho;
}

Representation image_representation(const NaiveRepresentation& rho) {
    const std::size_t n = rho.algebra().dim();
    const std::size_t d = rho.image().dim();
    const std::size_t m = rho.vdim();
    Representation rep{rho.algebra(), d, {}, {}};
    for (std::size_t i = 0; i < n; ++i) {
        Matrix l(d, d), r(d, d);
        for (std::size_t b = 0; b < d; ++b) {
            const auto& u = rho.image().basis()[b];
            const auto lu = rho.image_coordinates(omni_bracket(rho.rho(i), u, m));
            const auto ru = rho.image_coordinates(omni_bracket(u, rho.rho(i), m));
            if (!lu || !ru) throw CheckFailure("image_representation: Im rho is not closed under the bracket");
            for (std::size_t a = 0; a < d; ++a) {
                l(a, b) = (*lu)[a];
                r(a, b) = (*ru)[a];
            }
        }
        rep.l.push_back(std::move(l));
        rep.r.push_back(std::move(r));
    }
    return rep;
}

Cochain naive_coboundary(const NaiveRepresentation& rho, const Cochain& f, std::size_t cap) {
    const auto& g = rho.algebra();
    const std::size_t n = g.dim();
    const std::size_t d = rho.image().dim();
    const std::size_t m = rho.vdim();
    if (f.n() != n || f.m() != d) throw InputError("naive_coboundary: cochain is not valued in Im rho");
    const std::size_t k = f.degree();
    const std::size_t out_tuples = tuple_count(n, k + 1);
    if (out_tuples * d > cap) throw ResourceLimitError(out_tuples * d, cap);

    // f with values embedded in gl(V) ⊕ V; zero values are skipped below.
    std::vector<Vector> F;
    std::vector<char> live;
    for (std::size_t si = 0; si < tuple_count(n, k); ++si) {
        F.push_back(rho.embed(f.value_at(si)));
        live.push_back(!is_zero(F.back()));
    }
    if (std::find(live.begin(), live.end(), 1) == live.end()) return Cochain(k + 1, n, d);

    Cochain out(k + 1, n, d);
    std::vector<std::size_t> t(k + 1);
    std::vector<std::size_t> s;
    s.reserve(k + 1);
    for (std::size_t ti = 0; ti < out_tuples; ++ti) {
        decode_tuple(ti, n, t);
        Vector acc(rho.ambient_dim());
        bool touched = false;
        for (std::size_t i = 1; i <= k; ++i) {
            s.assign(t.begin(), t.end());
            s.erase(s.begin() + static_cast<std::ptrdiff_t>(i - 1));
            const std::size_t si = encode_tuple(s, n);
            if (!live[si]) continue;
            axpy(acc, sign_of(i + 1), omni_bracket(rho.rho(t[i - 1]), F[si], m));
            touched = true;
        }
        if (const std::size_t si = encode_tuple(std::span<const std::size_t>(t).first(k), n); live[si]) {
            axpy(acc, sign_of(k + 1), omni_bracket(F[si], rho.rho(t[k]), m));
            touched = true;
        }
        for (std::size_t i = 1; i <= k + 1; ++i)
            for (std::size_t j = i + 1; j <= k + 1; ++j)
                for (std::size_t w = 0; w < n; ++w) {
                    const Rational& coeff = g.c(t[i - 1], t[j - 1], w);
                    if (sgn(coeff) == 0) continue;
                    s.assign(t.begin(), t.end());
                    s[j - 1] = w;
                    s.erase(s.begin() + static_cast<std::ptrdiff_t>(i - 1));
                    const std::size_t si = encode_tuple(s, n);
                    if (!live[si]) continue;
                    axpy(acc, sign_of(i) * coeff, F[si]);
                    touched = true;
                }
        if (!touched || is_zero(acc)) continue;
        const auto coords = rho.image_coordinates(acc);
        if (!coords) throw CheckFailure("naive_coboundary: value escapes Im rho; rho is not a homomorphism");
        std::copy(coords->begin(), coords->end(), out.value_at(ti).begin());
    }
    return out;
}

Matrix naive_coboundary_matrix(const NaiveRepresentation& rho, std::size_t k, std::size_t cap) {
    const std::size_t n = rho.algebra().dim();
    const std::size_t d = rho.image().dim();
    const std::size_t rows = tuple_count(n, k + 1) * d;
    if (rows > cap) throw ResourceLimitError(rows, cap);
    const std::size_t cols = tuple_count(n, k) * d;
    Matrix mat(rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        const Cochain col = naive_coboundary(rho, Cochain::basis(k, n, d, c), cap);
        for (std::size_t r = 0; r < rows; ++r) mat(r, c) = col.coeffs()[r];
    }
    return mat;
}

BettiReport naive_betti(const NaiveRepresentation& rho, std::size_t kmax, std::size_t cap) {
    std::vector<Matrix> ds;
    for (std::size_t k = 0; k <= kmax; ++k) {
        ds.push_back(naive_coboundary_matrix(rho, k, cap));
        if (k > 0 && !(ds[k] * ds[k - 1]).is_zero())
            throw InternalError("naive_betti: delta^2 != 0 in degree " + std::to_string(k - 1));
    }
    return betti_from_matrices(ds);
}

bool ComparisonReport::all_equal() const {
    for (const auto& d : degrees)
        if (!d.informational && !d.equal) return false;
    return correspondence.holds();
}

ComparisonReport compare_betti(const BettiReport& naive, const BettiReport& classical, std::string branch) {
    ComparisonReport report;
    report.branch = std::move(branch);
    const std::size_t count = std::min(naive.degrees.size(), classical.degrees.size());
    for (std::size_t k = 0; k < count; ++k) {
        DegreeComparison d;
        d.k = k;
        d.dim_naive = naive.degrees[k].dim_cohomology;
        d.dim_classical = classical.degrees[k].dim_cohomology;
        d.equal = d.dim_naive == d.dim_classical;
        d.informational = k == 0;
        report.degrees.push_back(d);
    }
    return report;
}

ComparisonReport compare_trivial_with(const LeibnizAlgebra& g, const Vector& xi, std::size_t kmax,
                                      std::size_t cap) {
    if (is_zero(xi)) throw InputError("compare_trivial_with: xi must be nonzero");
    const auto rho = trivial_naive(g, xi);
    if (const auto report = naive_check(rho); !report.holds())
        throw CheckFailure("compare_trivial_with: xi does not vanish on [g,g]");
    return compare_betti(naive_betti(rho, kmax, cap), betti(trivial_rep(g), kmax, cap), "trivial: xi");
}

ComparisonReport compare_trivial(const LeibnizAlgebra& g, std::size_t kmax, std::size_t cap) {
    const Subspace annihilator = trivial_naive_space(g);
    if (annihilator.dim() == 0) {
        // [g,g] = g: the only trivial naive representation is rho = 0.
        const NaiveRepresentation zero(g, 1, std::vector<Matrix>(g.dim(), Matrix(1, 1)),
                                       std::vector<Vector>(g.dim(), Vector(1)));
        return compare_betti(naive_betti(zero, kmax, cap), betti(trivial_rep(g), kmax, cap),
                             "trivial: [g,g] = g, rho = 0");
    }
    return compare_trivial_with(g, annihilator.basis().front(), kmax, cap);
}

Representation graph_representation(const NaiveRepresentation& rho, const GraphMap& phi) {
    phi.validate_shape();
    const std::size_t m = phi.vdim;
    if (rho.vdim() != m) throw InputError("graph_representation: V dimensions differ");
    Representation rep{rho.algebra(), m, {}, {}};
    for (std::size_t i = 0; i < rho.algebra().dim(); ++i) {
        const Vector& th = rho.theta()[i];
        rep.l.push_back(phi.at(th));
        Matrix r(m, m);
        for (std::size_t b = 0; b < m; ++b) {
            const Vector col = phi.phi[b] * th;
            for (std::size_t a = 0; a < m; ++a) r(a, b) = col[a];
        }
        rep.r.push_back(std::move(r));
    }
    return rep;
}

namespace {

// δ(φ∘𝔣 + 𝔣) against φ∘∂𝔣 + ∂𝔣 for every basis cochain 𝔣 of degree <= kmax.
IdentityReport graph_correspondence(const NaiveRepresentation& rho, const GraphMap& phi,
                                    const Representation& classical, std::size_t kmax, std::size_t cap) {
    const std::size_t n = rho.algebra().dim();
    const std::size_t m = phi.vdim;
    IdentityReport report;
    auto lift = [&](std::span<const Rational> v) { return omni_element(phi.at(v), v); };
    for (std::size_t k = 0; k <= kmax; ++k) {
        const std::size_t in_tuples = tuple_count(n, k);
        const std::size_t out_tuples = tuple_count(n, k + 1);
        for (std::size_t b = 0; b < in_tuples * m; ++b) {
            const Cochain frak = Cochain::basis(k, n, m, b);
            Cochain f(k, n, rho.image().dim());
            for (std::size_t si = 0; si < in_tuples; ++si) {
                const auto coords = rho.image_coordinates(lift(frak.value_at(si)));
                if (!coords) throw CheckFailure("graph correspondence: phi∘f + f is not valued in Im rho");
                std::copy(coords->begin(), coords->end(), f.value_at(si).begin());
            }
            const Cochain df = naive_coboundary(rho, f, cap);
            const Cochain dfrak = coboundary(classical, frak, cap);
            for (std::size_t ti = 0; ti < out_tuples; ++ti)
                report.expect_zero("correspondence", {k, b, ti},
                                   rho.embed(df.value_at(ti)) - lift(dfrak.value_at(ti)));
        }
    }
    return report;
}

}  // namespace

ComparisonReport graph_rep_cohomology(const NaiveRepresentation& rho, const GraphMap& phi, std::size_t kmax,
                                      std::size_t cap) {
    if (const auto report = graph_check(phi); !report.holds())
        throw CheckFailure("graph_rep_cohomology: phi fails the graph condition: " +
                           describe(report.witnesses().front()));
    if (phi.vdim != rho.vdim()) throw InputError("graph_rep_cohomology: V dimensions differ");
    for (std::size_t i = 0; i < rho.algebra().dim(); ++i) {
        if (rho.phi()[i] != phi.at(rho.theta()[i]))
            throw CheckFailure("graph_rep_cohomology: rho(e_" + std::to_string(i) + ") is not in the graph of phi");
    }
    const Representation classical = graph_representation(rho, phi);
    if (const auto report = check_representation(classical); !report.holds())
        throw InternalError("graph_rep_cohomology: induced (l, r) is not a representation: " +
                            describe(report.witnesses().front()));

    const bool full_graph = rho.image().dim() == phi.vdim;
    ComparisonReport out = compare_betti(naive_betti(rho, kmax, cap), betti(classical, kmax, cap),
                                         full_graph ? "graph" : "graph: Im rho is a proper subspace of the graph");
    if (full_graph) out.correspondence = graph_correspondence(rho, phi, classical, kmax, cap);
    return out;
}

ComparisonReport compare_adjoint(const LeibnizAlgebra& g, std::size_t kmax, std::size_t cap) {
    const NaiveRepresentation rho = adjoint_naive(g);
    const GraphMap ad = left_multiplication_map(g);
    const Representation classical = adjoint_rep(g);
    ComparisonReport out = compare_betti(naive_betti(rho, kmax, cap), betti(classical, kmax, cap), "adjoint");
    out.correspondence = graph_correspondence(rho, ad, classical, kmax, cap);
    return out;
}

}  // namespace leibniz
