#pragma once

#include <array>
#include <cstddef>

#include "leibniz/algebra.hpp"
#include "leibniz/multilinear.hpp"

namespace leibniz {

/// ⟦x, y⟧ = ½([x, y] - [y, x]) as an n x n -> n tensor.
MultilinearMap skew_bracket(const LeibnizAlgebra& g);

/// Cyclic sum ⟦x,⟦y,z⟧⟧ + ⟦y,⟦z,x⟧⟧ + ⟦z,⟦x,y⟧⟧.
Vector jacobiator_direct(const LeibnizAlgebra& g, const Vector& x, const Vector& y, const Vector& z);

/// ¼([[z,y],x] + [[x,z],y] + [[y,x],z]); agrees with jacobiator_direct on
/// Leibniz algebras.
Vector jacobiator_closed(const LeibnizAlgebra& g, const Vector& x, const Vector& y, const Vector& z);

/// Exhaustive basis check of the Jacobiator facts for a Leibniz algebra.
/// Witness labels:
///   "closed-form"    direct and closed-form Jacobiators differ
///   "left-center"    [J_{i,j,k}, e_l] != 0
///   "ten-term"       the quartic identity relating ⟦·,·⟧ and J fails
///   "antisymmetry"   J changes by something other than a sign under a swap
IdentityReport check_jacobiator_identities(const LeibnizAlgebra& g);

/// 2-term graded space g1 ⊕ g0 (degree 1 and 0) with brackets l1, l2, l3.
/// l2 on (g0, g1) is stored as l2_01(x, a) with l2(a, x) = -l2(x, a).
struct Lie2Algebra {
    std::size_t dim1 = 0;
    std::size_t dim0 = 0;
    Matrix l1;             // dim0 x dim1, g1 -> g0
    MultilinearMap l2_00;  // g0 x g0 -> g0
    MultilinearMap l2_01;  // g0 x g1 -> g1
    MultilinearMap l2_11;  // g1 x g1 -> g1, no axiom involves it
    MultilinearMap l3;     // g0 x g0 x g0 -> g1

    /// Zero brackets of the right shapes.
    static Lie2Algebra zero(std::size_t dim1, std::size_t dim0);
    /// A Lie algebra as a Lie 2-algebra concentrated in degree 0.
    static Lie2Algebra from_lie(const LeibnizAlgebra& g);
};

/// Shape invariants: l2_00 antisymmetric, l3 totally antisymmetric.
IdentityReport lie2_shape_check(const Lie2Algebra& L);

/// The Lie 2-algebra of a Leibniz algebra: g1 = Z(g), g0 = g, l1 the
/// inclusion, l2 = ⟦·,·⟧ (½[x, c] on mixed inputs, zero on g1 x g1) and
/// l3 = J in center coordinates. Throws CheckFailure when a Jacobiator or a
/// mixed bracket escapes the left center, which only happens for inputs that
/// are not Leibniz.
Lie2Algebra build_lie2(const LeibnizAlgebra& g);

struct AxiomReport {
    static constexpr std::array<const char*, 5> names{"(a)", "(b)", "(c)", "(d)", "(e)"};
    std::array<IdentityReport, 5> axioms;

    bool passes() const {
        for (const auto& a : axioms)
            if (!a.holds()) return false;
        return true;
    }
};

/// Checks axioms (a)-(e) on all basis tuples (x, y, z, w in g0; a, b in g1).
/// Axiom (e) is checked in its ten-term form:
///   l2(x,l3(y,z,w)) - l2(y,l3(x,z,w)) + l2(z,l3(x,y,w)) - l2(w,l3(x,y,z))
///   - l3(l2(x,y),z,w) + l3(l2(x,z),y,w) - l3(l2(x,w),y,z)
///   - l3(l2(y,z),x,w) + l3(l2(y,w),x,z) - l3(l2(z,w),x,y) = 0.
AxiomReport verify_lie2(const Lie2Algebra& L);

}  // namespace leibniz
