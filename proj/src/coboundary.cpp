#include "leibniz/coboundary.hpp"

#include <tuple>

#include "leibniz/errors.hpp"
#include "leibniz/linalg.hpp"

namespace leibniz {
namespace {

struct BracketTerm {
    std::size_t x;
    std::size_t y;
    Rational coeff;
};

// For each basis index w, the pairs (x, y) with c(x, y, w) != 0.
std::vector<std::vector<BracketTerm>> bracket_preimages(const LeibnizAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<std::vector<BracketTerm>> pre(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t w = 0; w < n; ++w)
                if (sgn(g.c(x, y, w)) != 0) pre[w].push_back({x, y, g.c(x, y, w)});
    return pre;
}

int sign_of(std::size_t exponent) { return exponent % 2 == 0 ? 1 : -1; }

void require_compatible(const Representation& rep, const Cochain& c) {
    rep.validate_shape();
    if (c.n() != rep.algebra.dim() || c.m() != rep.vdim)
        throw InputError("coboundary: cochain shape does not match the representation");
}

}  // namespace

Cochain coboundary(const Representation& rep, const Cochain& c, std::size_t cap) {
    require_compatible(rep, c);
    const std::size_t n = rep.algebra.dim();
    const std::size_t m = rep.vdim;
    const std::size_t k = c.degree();
    const std::size_t target = tuple_count(n, k + 1) * m;
    if (target > cap) throw ResourceLimitError(target, cap);

    Cochain d(k + 1, n, m);
    const auto pre = bracket_preimages(rep.algebra);
    const std::size_t in_tuples = tuple_count(n, k);
    std::vector<std::size_t> s(k);
    std::vector<std::size_t> t;
    t.reserve(k + 1);

    auto scatter_matrix_column = [&](std::size_t ti, int sign, const Rational& alpha, const Matrix& mat,
                                     std::size_t b) {
        auto out = d.value_at(ti);
        for (std::size_t a = 0; a < m; ++a) {
            const Rational& e = mat(a, b);
            if (sgn(e) == 0) continue;
            if (sign > 0)
                out[a] += alpha * e;
            else
                out[a] -= alpha * e;
        }
    };

    for (std::size_t si = 0; si < in_tuples; ++si) {
        const auto value = c.value_at(si);
        if (is_zero(value)) continue;
        decode_tuple(si, n, s);
        for (std::size_t b = 0; b < m; ++b) {
            const Rational& alpha = value[b];
            if (sgn(alpha) == 0) continue;

            // l_{x_i} terms: x_i was removed from position i <= k of the output tuple.
            for (std::size_t p = 0; p < k; ++p) {
                for (std::size_t x = 0; x < n; ++x) {
                    t.assign(s.begin(), s.end());
                    t.insert(t.begin() + static_cast<std::ptrdiff_t>(p), x);
                    scatter_matrix_column(encode_tuple(t, n), sign_of(p), alpha, rep.l[x], b);
                }
            }
            // r_{x_{k+1}} term.
            for (std::size_t x = 0; x < n; ++x) {
                t.assign(s.begin(), s.end());
                t.push_back(x);
                scatter_matrix_column(encode_tuple(t, n), sign_of(k + 1), alpha, rep.r[x], b);
            }
            // Bracket terms: [x_i, x_j] sits at position j-1 (1-based) of the input tuple.
            for (std::size_t j = 2; j <= k + 1; ++j) {
                const std::size_t w = s[j - 2];
                for (std::size_t i = 1; i < j; ++i) {
                    for (const auto& term : pre[w]) {
                        t.assign(s.begin(), s.end());
                        t[j - 2] = term.y;
                        t.insert(t.begin() + static_cast<std::ptrdiff_t>(i - 1), term.x);
                        auto& slot = d.value_at(encode_tuple(t, n))[b];
                        if (sign_of(i) > 0)
                            slot += alpha * term.coeff;
                        else
                            slot -= alpha * term.coeff;
                    }
                }
            }
        }
    }
    return d;
}

Matrix coboundary_matrix(const Representation& rep, std::size_t k, std::size_t cap) {
    rep.validate_shape();
    const auto& g = rep.algebra;
    const std::size_t n = g.dim();
    const std::size_t m = rep.vdim;
    const std::size_t out_tuples = tuple_count(n, k + 1);
    const std::size_t rows = out_tuples * m;
    if (rows > cap) throw ResourceLimitError(rows, cap);
    Matrix mat(rows, tuple_count(n, k) * m);

    std::vector<std::size_t> t(k + 1);
    std::vector<std::size_t> s;
    s.reserve(k + 1);
    for (std::size_t ti = 0; ti < out_tuples; ++ti) {
        decode_tuple(ti, n, t);
        for (std::size_t i = 1; i <= k; ++i) {
            s.assign(t.begin(), t.end());
            s.erase(s.begin() + static_cast<std::ptrdiff_t>(i - 1));
            const std::size_t si = encode_tuple(s, n);
            const Matrix& act = rep.l[t[i - 1]];
            const int sign = sign_of(i + 1);
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b)
                    if (sgn(act(a, b)) != 0) mat(ti * m + a, si * m + b) += sign * act(a, b);
        }
        {
            const std::size_t si = encode_tuple(std::span<const std::size_t>(t).first(k), n);
            const Matrix& act = rep.r[t[k]];
            const int sign = sign_of(k + 1);
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b)
                    if (sgn(act(a, b)) != 0) mat(ti * m + a, si * m + b) += sign * act(a, b);
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
                    for (std::size_t a = 0; a < m; ++a) mat(ti * m + a, si * m + a) += sign_of(i) * coeff;
                }
    }
    return mat;
}

BettiReport betti_from_matrices(const std::vector<Matrix>& differentials) {
    BettiReport report;
    std::size_t previous_rank = 0;
    for (std::size_t k = 0; k < differentials.size(); ++k) {
        if (k > 0 && differentials[k].cols() != differentials[k - 1].rows())
            throw InputError("betti: consecutive differentials do not compose");
        BettiDegree deg;
        deg.k = k;
        deg.dim_cochains = differentials[k].cols();
        deg.rank_d = rank(differentials[k]);
        deg.dim_kernel = deg.dim_cochains - deg.rank_d;
        if (deg.dim_kernel < previous_rank) throw InternalError("betti: image exceeds kernel (∂∂ != 0)");
        deg.dim_cohomology = deg.dim_kernel - previous_rank;
        previous_rank = deg.rank_d;
        report.degrees.push_back(deg);
    }
    return report;
}

BettiReport betti(const Representation& rep, std::size_t kmax, std::size_t cap) {
    std::vector<Matrix> ds;
    for (std::size_t k = 0; k <= kmax; ++k) ds.push_back(coboundary_matrix(rep, k, cap));
    return betti_from_matrices(ds);
}

IdentityReport cocycle_check(const Representation& rep, const Cochain& c, std::size_t cap) {
    const Cochain d = coboundary(rep, c, cap);
    IdentityReport report;
    std::vector<std::size_t> t(d.degree());
    const std::size_t tuples = tuple_count(d.n(), d.degree());
    for (std::size_t ti = 0; ti < tuples; ++ti) {
        const auto v = d.value_at(ti);
        if (is_zero(v)) continue;
        decode_tuple(ti, d.n(), t);
        report.add("cocycle", t, Vector(v.begin(), v.end()));
    }
    return report;
}

Cochain right_action_cochain(const Representation& rep) {
    rep.validate_shape();
    const std::size_t n = rep.algebra.dim();
    const std::size_t mm = rep.vdim * rep.vdim;
    Cochain c(1, n, mm);
    for (std::size_t i = 0; i < n; ++i) {
        const auto flat = flatten(rep.r[i]);
        std::copy(flat.begin(), flat.end(), c.value_at(i).begin());
    }
    return c;
}

}  // namespace leibniz
