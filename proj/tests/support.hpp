#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "leibniz/json_io.hpp"

namespace testing_support {

using namespace leibniz;

inline std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline Json read_json(const std::string& relative) {
    std::ifstream in(fixture_path(relative));
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), relative);
}

inline LeibnizAlgebra fixture(const std::string& name) { return algebra_from_json(read_json(name + ".json")); }

// Every positive algebra fixture, by file stem.
inline const std::vector<std::string>& positive_fixtures() {
    static const std::vector<std::string> names{
        "abelian1", "abelian2", "abelian3", "L2", "L2_scaled", "heis3", "sl2", "omni1", "omni2",
        "semidirect_heis3_adjoint_lr", "semidirect_L2_adjoint_l0"};
    return names;
}

// Fixtures small enough for degree-3 complexes with adjoint-sized coefficients.
inline const std::vector<std::string>& small_fixtures() {
    static const std::vector<std::string> names{"abelian1", "abelian2", "abelian3", "L2", "heis3", "sl2", "omni1"};
    return names;
}

inline Vector vec(std::initializer_list<Rational> xs) { return Vector(xs); }

inline Matrix mat(std::initializer_list<std::initializer_list<Rational>> rows) {
    std::vector<Vector> rs;
    for (const auto& r : rows) rs.emplace_back(r);
    return Matrix::from_rows(rs, rs.empty() ? 0 : rs.front().size());
}

inline Rational random_rational(std::mt19937& rng, int span = 4) {
    std::uniform_int_distribution<int> num(-span, span), den(1, 3);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

// Random matrix whose entries are zero with probability about one half, so
// that rank deficiency actually occurs.
inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    std::bernoulli_distribution nonzero(0.5);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (nonzero(rng)) m(r, c) = random_rational(rng);
    return m;
}

inline Cochain random_cochain(std::mt19937& rng, std::size_t degree, std::size_t n, std::size_t m) {
    Cochain c(degree, n, m);
    std::bernoulli_distribution nonzero(0.4);
    for (auto& q : c.coeffs())
        if (nonzero(rng)) q = random_rational(rng, 3);
    return c;
}

}  // namespace testing_support
