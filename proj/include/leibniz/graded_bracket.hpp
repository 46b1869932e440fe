#pragma once

#include "leibniz/algebra.hpp"
#include "leibniz/cochain.hpp"

namespace leibniz {

/// The structure constants of g as a g-valued 2-cochain.
Cochain structure_cochain(const LeibnizAlgebra& g);

/// g-valued cochain α of degree p+1 composed with β of degree q+1:
///
///   α∘β(x_1..x_{p+q+1}) = Σ_{k=0}^{p} (-1)^{kq} Σ_{σ ∈ sh(k,q)} sgn(σ)
///       α(x_σ(1)..x_σ(k), β(x_σ(k+1)..x_σ(k+q), x_{k+q+1}), x_{k+q+2}..x_{p+q+1})
///
/// Both cochains must be valued in the algebra they are defined on (m = n)
/// and have degree >= 1; otherwise InputError.
Cochain circle_product(const Cochain& alpha, const Cochain& beta);

/// [α, β] = α∘β + (-1)^{pq+1} β∘α.
Cochain graded_bracket(const Cochain& alpha, const Cochain& beta);

}  // namespace leibniz
