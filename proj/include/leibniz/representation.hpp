#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// A representation (V, l, r) of a Leibniz algebra: one pair of m x m
/// matrices (l_i, r_i) per basis vector e_i of g.
struct Representation {
    LeibnizAlgebra algebra;
    std::size_t vdim = 0;
    std::vector<Matrix> l;
    std::vector<Matrix> r;

    /// l_x and r_x for arbitrary x ∈ g.
    Matrix left(std::span<const Rational> x) const;
    Matrix right(std::span<const Rational> x) const;

    /// Throws InputError unless there are n matrices of shape m x m in each family.
    void validate_shape() const;
    bool has_zero_right_action() const;
};

/// l_{[x,y]} = [l_x, l_y], r_{[x,y]} = [l_x, r_y], r_y l_x = -r_y r_x on all
/// basis pairs. Witness labels "l-bracket", "r-bracket", "r-l" with
/// indices (i, j) for x = e_i, y = e_j and the flattened defect matrix.
IdentityReport check_representation(const Representation& rep);

/// (R, 0, 0).
Representation trivial_rep(const LeibnizAlgebra& g);

/// (g, ad_L, ad_R) with ad_L(x)y = [x, y] and ad_R(x)y = [y, x].
Representation adjoint_rep(const LeibnizAlgebra& g);

/// (V, l, 0) from (V, l, r).
Representation without_right_action(const Representation& rep);

/// (V*, l*, 0) with l*_x = -l_x^T. Throws InputError when rep.r != 0.
Representation dual_rep(const Representation& rep);

/// The representation l*⊗1 + 1⊗l on V*⊗V ≅ gl(V), acting by A -> [l_x, A]
/// with zero right action. The basis of gl(V) is the elementary matrices E_ab
/// in row-major order (index a*m + b). Throws InputError when rep.r != 0.
Representation conjugation_rep(const Representation& rep);

/// Matrix of A -> [l, A] on gl(V) in the row-major elementary basis.
Matrix commutator_action(const Matrix& l);

}  // namespace leibniz
