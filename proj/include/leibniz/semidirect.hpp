#pragma once

#include "leibniz/coboundary.hpp"

namespace leibniz {

enum class SemidirectMode {
    LeftRight,  // [x+u, y+v] = [x,y] + l_x v + r_y u
    LeftOnly,   // [x+u, y+v] = [x,y] + l_x v
};

/// g ⊕ V with basis e_0..e_{n-1} followed by the basis of V. The result is
/// checked with check_leibniz; an InternalError means rep was not a valid
/// representation.
LeibnizAlgebra semidirect(const Representation& rep, SemidirectMode mode);

/// r̄(x+u, y+v) = r_y u as a (g⊕V)-valued 2-cochain on g⊕V.
Cochain rbar(const Representation& rep);

/// On g ⋉_{(l,0)} V with its adjoint representation: ∂r̄ - ½[r̄, r̄] = 0
/// (witness label "maurer-cartan") and [·,·]_{(l,0)} + r̄ = [·,·]_{(l,r)}
/// (witness label "deformation").
IdentityReport maurer_cartan_check(const Representation& rep);

}  // namespace leibniz
