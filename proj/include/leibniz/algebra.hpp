#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "leibniz/identity_report.hpp"
#include "leibniz/linalg.hpp"

namespace leibniz {

/// A bilinear map Q^n x Q^n -> Q^n given by structure constants
/// [e_i, e_j] = Σ_k c(i, j, k) e_k. Nothing about the Leibniz identity is
/// assumed at construction; use check_leibniz before relying on it.
class LeibnizAlgebra {
public:
    LeibnizAlgebra() = default;
    explicit LeibnizAlgebra(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}
    /// `constants` is indexed (i * n + j) * n + k.
    LeibnizAlgebra(std::size_t dim, std::vector<Rational> constants);

    std::size_t dim() const noexcept { return dim_; }

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    Rational& c(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
    std::span<const Rational> constants() const noexcept { return c_; }

    /// [e_i, e_j] as a coordinate vector.
    std::span<const Rational> bracket_basis(std::size_t i, std::size_t j) const {
        return {c_.data() + (i * dim_ + j) * dim_, dim_};
    }
    /// Bilinear extension of the structure constants.
    Vector bracket(std::span<const Rational> x, std::span<const Rational> y) const;

    /// Matrix of y -> [e_i, y].
    Matrix left_multiplication(std::size_t i) const;
    /// Matrix of y -> [y, e_i].
    Matrix right_multiplication(std::size_t i) const;

    bool operator==(const LeibnizAlgebra& rhs) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<Rational> c_;
};

/// Defect [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - [e_j,[e_i,e_k]] on every basis triple.
IdentityReport check_leibniz(const LeibnizAlgebra& g);

/// Z(g) = {x : [x, y] = 0 for all y}.
Subspace left_center(const LeibnizAlgebra& g);

/// span{[e_i, e_j]}.
Subspace derived_subalgebra(const LeibnizAlgebra& g);

/// Antisymmetry of the structure constants.
bool is_lie(const LeibnizAlgebra& g);

/// [[e_i,e_j] + [e_j,e_i], e_k] = 0 for all i, j, k, i.e. every square lies in Z(g).
IdentityReport square_in_center_check(const LeibnizAlgebra& g);

/// Z(g) is a two-sided ideal: [z, e_i] = 0 and [e_i, z] ∈ Z(g) for every
/// basis vector z of the left center.
IdentityReport left_center_ideal_check(const LeibnizAlgebra& g);

struct Quotient {
    LeibnizAlgebra algebra;
    /// (n - dim Z) x n; sends a vector of g to its class in complement coordinates.
    Matrix projection;
    /// Standard basis indices spanning the chosen complement of Z(g).
    std::vector<std::size_t> complement;
};

/// g / Z(g) on the complement spanned by the standard basis vectors that are
/// not pivot columns of the RREF of a center basis. Throws InternalError if
/// the induced bracket is ill-defined or not antisymmetric.
Quotient quotient_by_left_center(const LeibnizAlgebra& g);

}  // namespace leibniz
