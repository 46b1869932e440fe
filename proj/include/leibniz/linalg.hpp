#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form. Forward elimination is fraction-free (Bareiss)
/// on the row-scaled integer matrix; back-substitution runs over the
/// rationals.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Linear subspace of Q^ambient_dim with a linearly independent basis.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}
    /// Takes ownership of an already independent basis. Throws InputError if
    /// the vectors are dependent or have the wrong length.
    Subspace(std::size_t ambient_dim, std::vector<Vector> basis);

    /// Independent basis of span(vectors): the nonzero rows of their RREF.
    static Subspace span_of(std::size_t ambient_dim, const std::vector<Vector>& vectors);
    static Subspace whole(std::size_t ambient_dim);

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<Vector>& basis() const noexcept { return basis_; }

    /// ambient_dim x dim matrix whose columns are the basis vectors.
    Matrix basis_matrix() const;

    /// Coefficients c with Σ c_i basis_i = v, or nullopt when v lies outside.
    std::optional<Vector> coordinates(const Vector& v) const;
    bool contains(const Vector& v) const { return coordinates(v).has_value(); }
    bool contains(const Subspace& other) const;

    friend bool same_subspace(const Subspace& a, const Subspace& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.dim() == b.dim() && a.contains(b);
    }

private:
    std::size_t ambient_dim_;
    std::vector<Vector> basis_;
};

/// Basis of {x : m x = 0}.
Subspace kernel_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when inconsistent. Throws InputError when
/// b.size() != m.rows().
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Precomputed coordinate map onto a fixed independent basis, for repeated
/// membership solves against the same subspace.
class CoordinateMap {
public:
    explicit CoordinateMap(const Subspace& space);

    /// Same contract as Subspace::coordinates.
    std::optional<Vector> operator()(const Vector& v) const;
    std::size_t dim() const noexcept { return basis_.cols(); }

private:
    Matrix basis_;       // ambient x dim
    Matrix left_inverse_; // dim x ambient, left_inverse_ * basis_ = I
};

}  // namespace leibniz
