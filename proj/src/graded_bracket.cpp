#include "leibniz/graded_bracket.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/shuffle.hpp"

namespace leibniz {

Cochain structure_cochain(const LeibnizAlgebra& g) {
    const auto c = g.constants();
    return Cochain(2, g.dim(), g.dim(), std::vector<Rational>(c.begin(), c.end()));
}

Cochain circle_product(const Cochain& alpha, const Cochain& beta) {
    const std::size_t n = alpha.n();
    if (alpha.m() != n || beta.n() != n || beta.m() != n)
        throw InputError("circle_product: both cochains must be valued in the algebra itself");
    if (alpha.degree() == 0 || beta.degree() == 0)
        throw InputError("circle_product: degree-0 cochains are not composable");
    const std::size_t p = alpha.degree() - 1;
    const std::size_t q = beta.degree() - 1;
    const std::size_t total = p + q + 1;

    std::vector<std::vector<Shuffle>> shuffle_sets;
    for (std::size_t k = 0; k <= p; ++k) shuffle_sets.push_back(shuffles(k, q));

    Cochain out(total, n, n);
    std::vector<std::size_t> t(total);
    std::vector<std::size_t> beta_args(q + 1);
    std::vector<std::size_t> alpha_args(p + 1);
    const std::size_t tuples = tuple_count(n, total);
    for (std::size_t ti = 0; ti < tuples; ++ti) {
        decode_tuple(ti, n, t);
        auto result = out.value_at(ti);
        for (std::size_t k = 0; k <= p; ++k) {
            const int outer_sign = (k * q) % 2 == 0 ? 1 : -1;
            for (const auto& sigma : shuffle_sets[k]) {
                for (std::size_t a = 0; a < q; ++a) beta_args[a] = t[sigma.image[k + a]];
                beta_args[q] = t[k + q];
                const auto inner = beta.value(beta_args);
                if (is_zero(inner)) continue;
                for (std::size_t a = 0; a < k; ++a) alpha_args[a] = t[sigma.image[a]];
                for (std::size_t a = k + 1; a <= p; ++a) alpha_args[a] = t[q + a];
                const int sign = outer_sign * sigma.sign;
                for (std::size_t s = 0; s < n; ++s) {
                    if (sgn(inner[s]) == 0) continue;
                    alpha_args[k] = s;
                    const auto val = alpha.value(alpha_args);
                    for (std::size_t v = 0; v < n; ++v) {
                        if (sgn(val[v]) == 0) continue;
                        if (sign > 0)
                            result[v] += inner[s] * val[v];
                        else
                            result[v] -= inner[s] * val[v];
                    }
                }
            }
        }
    }
    return out;
}

Cochain graded_bracket(const Cochain& alpha, const Cochain& beta) {
    const Cochain ab = circle_product(alpha, beta);
    const Cochain ba = circle_product(beta, alpha);
    const std::size_t p = alpha.degree() - 1;
    const std::size_t q = beta.degree() - 1;
    return (p * q) % 2 == 1 ? ab + ba : ab - ba;
}

}  // namespace leibniz
