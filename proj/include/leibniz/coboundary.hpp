#pragma once

#include <cstddef>
#include <vector>

#include "leibniz/cochain.hpp"
#include "leibniz/representation.hpp"

namespace leibniz {

/// Default refusal threshold for n^{k+1} * m, the dimension of the target
/// cochain space of a coboundary.
inline constexpr std::size_t kDefaultCochainCap = 20000;

/// The Leibniz coboundary C^k(g, V) -> C^{k+1}(g, V):
///
///   ∂c(x_1..x_{k+1}) = Σ_{i=1}^{k} (-1)^{i+1} l_{x_i} c(x_1..x̂_i..x_{k+1})
///                    + (-1)^{k+1} r_{x_{k+1}} c(x_1..x_k)
///                    + Σ_{i<j} (-1)^i c(x_1..x̂_i..x_{j-1},[x_i,x_j],x_{j+1}..x_{k+1})
///
/// At k = 0 only the middle term survives: ∂v(x) = -r_x v.
/// Evaluated by scattering the nonzero coefficients of c, so the cost scales
/// with the support of c rather than with dim C^{k+1}.
Cochain coboundary(const Representation& rep, const Cochain& c, std::size_t cap = kDefaultCochainCap);

/// Matrix of ∂ : C^k -> C^{k+1} in the monomial bases, assembled row by row
/// from the same formula. Throws ResourceLimitError when n^{k+1} * m > cap.
Matrix coboundary_matrix(const Representation& rep, std::size_t k, std::size_t cap = kDefaultCochainCap);

struct BettiDegree {
    std::size_t k = 0;
    std::size_t dim_cochains = 0;  // dim C^k
    std::size_t rank_d = 0;        // rank ∂_k
    std::size_t dim_kernel = 0;    // dim ker ∂_k
    std::size_t dim_cohomology = 0;
};

struct BettiReport {
    std::vector<BettiDegree> degrees;
};

/// Ranks and kernels of a sequence of coboundary matrices ∂_0..∂_kmax;
/// dim H^k = dim ker ∂_k - rank ∂_{k-1}.
BettiReport betti_from_matrices(const std::vector<Matrix>& differentials);

/// Betti numbers of H^k(g; V) for 0 <= k <= kmax.
BettiReport betti(const Representation& rep, std::size_t kmax, std::size_t cap = kDefaultCochainCap);

/// ∂c = 0, with the nonzero entries of ∂c as witnesses (label "cocycle",
/// indices = basis tuple followed by the value coordinate).
IdentityReport cocycle_check(const Representation& rep, const Cochain& c,
                             std::size_t cap = kDefaultCochainCap);

/// The right action viewed as a 1-cochain x -> r_x valued in gl(V), flattened
/// row-major, i.e. in the module of conjugation_rep(without_right_action(rep)).
Cochain right_action_cochain(const Representation& rep);

}  // namespace leibniz
