#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Coordinates on gl(V) ⊕ V: the m*m entries of the matrix part in row-major
/// order, followed by the m coordinates of the vector part.
std::size_t omni_dim(std::size_t m);
Vector omni_element(const Matrix& a, std::span<const Rational> u);
Matrix omni_matrix_part(std::span<const Rational> x, std::size_t m);
Vector omni_vector_part(std::span<const Rational> x, std::size_t m);

/// ⟦A+u, B+v⟧ = [A, B] + Av, computed from the matrices directly.
Vector omni_bracket(std::span<const Rational> x, std::span<const Rational> y, std::size_t m);

/// ol(V) for dim V = m as structure constants in the coordinates above.
/// Checked with check_leibniz before returning.
LeibnizAlgebra omni_lie(std::size_t m);
/// The same structure constants without the check; check_leibniz is O(dim^4).
LeibnizAlgebra omni_lie_unchecked(std::size_t m);

/// A linear map φ : V -> gl(V), φ(u) = Σ_i u_i phi[i].
struct GraphMap {
    std::size_t vdim = 0;
    std::vector<Matrix> phi;

    Matrix at(std::span<const Rational> u) const;
    void validate_shape() const;
};

/// [φ(e_i), φ(e_j)] = φ(φ(e_i) e_j) on all basis pairs (label "graph"),
/// i.e. the graph {φ(u) + u} is a subalgebra of ol(V).
IdentityReport graph_check(const GraphMap& phi);

/// (V, [u, v] = φ(u) v). Throws CheckFailure if graph_check fails.
LeibnizAlgebra induced_leibniz(const GraphMap& phi);

/// The left multiplications of a Leibniz algebra as a graph map on g itself.
GraphMap left_multiplication_map(const LeibnizAlgebra& g);

}  // namespace leibniz
