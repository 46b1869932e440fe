#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "leibniz/coboundary.hpp"
#include "leibniz/omni.hpp"

namespace leibniz {

/// A linear map ρ = φ + θ : g -> gl(V) ⊕ V given on the basis of g. Whether
/// it is a homomorphism into ol(V) is decided by naive_check; the image is
/// computed once at construction.
class NaiveRepresentation {
public:
    NaiveRepresentation(LeibnizAlgebra g, std::size_t vdim, std::vector<Matrix> phi, std::vector<Vector> theta);

    const LeibnizAlgebra& algebra() const noexcept { return algebra_; }
    std::size_t vdim() const noexcept { return vdim_; }
    std::size_t ambient_dim() const noexcept { return omni_dim(vdim_); }
    const std::vector<Matrix>& phi() const noexcept { return phi_; }
    const std::vector<Vector>& theta() const noexcept { return theta_; }

    /// ρ(e_i) in gl(V) ⊕ V coordinates.
    const Vector& rho(std::size_t i) const { return rho_.at(i); }
    /// ρ(x) for arbitrary x.
    Vector rho(std::span<const Rational> x) const;

    /// Im ρ, with basis the nonzero rows of the RREF of the ρ(e_i).
    const Subspace& image() const noexcept { return image_; }
    /// Coordinates in the image basis; nullopt outside Im ρ.
    std::optional<Vector> image_coordinates(const Vector& ambient) const { return image_coords_(ambient); }
    Vector embed(std::span<const Rational> image_coords) const;

private:
    LeibnizAlgebra algebra_;
    std::size_t vdim_;
    std::vector<Matrix> phi_;
    std::vector<Vector> theta_;
    std::vector<Vector> rho_;
    Subspace image_;
    CoordinateMap image_coords_;
};

/// Checks φ([x,y]) = [φ(x), φ(y)] (label "con1") and θ([x,y]) = φ(x)θ(y)
/// (label "con2") on basis pairs, and cross-checks against the direct test
/// ρ([x,y]) = ⟦ρ(x), ρ(y)⟧ in ol(V). Throws InternalError if the two
/// verdicts disagree.
IdentityReport naive_check(const NaiveRepresentation& rho);

/// The direct homomorphism test alone (label "homomorphism"), using the
/// structure constants of omni_lie(m).
IdentityReport naive_homomorphism_check(const NaiveRepresentation& rho);

/// {ξ ∈ g* : ξ|_{[g,g]} = 0}, in dual-basis coordinates.
Subspace trivial_naive_space(const LeibnizAlgebra& g);

/// ρ_T = 0 + ξ : g -> gl(R) ⊕ R.
NaiveRepresentation trivial_naive(const LeibnizAlgebra& g, const Vector& xi);

/// ρ = ad_L + id : g -> gl(g) ⊕ g. Asserts naive_check.
NaiveRepresentation adjoint_naive(const LeibnizAlgebra& g);

/// ρ = (l*⊗1 + 1⊗l) + r : g -> ol(V*⊗V) on the m^2-dimensional space of
/// m x m matrices. Throws CheckFailure for an invalid representation; asserts
/// naive_check on the result.
NaiveRepresentation naive_from_rep(const Representation& rep);

/// (Im ρ, l, r) with l_x u = ⟦ρ(x), u⟧ and r_x u = ⟦u, ρ(x)⟧, in image
/// coordinates. δ is the Leibniz coboundary of this representation.
Representation image_representation(const NaiveRepresentation& rho);

/// δ on C^k(g; ρ) = Hom(g^{⊗k}, Im ρ); cochains carry image coordinates
/// (m = dim Im ρ). Evaluates the defining formula with the ol(V) bracket and
/// maps each value back into Im ρ; throws CheckFailure if a value escapes.
/// At k = 0 only the middle term survives: δv(x) = -⟦v, ρ(x)⟧.
Cochain naive_coboundary(const NaiveRepresentation& rho, const Cochain& f, std::size_t cap = kDefaultCochainCap);

/// Matrix of δ : C^k -> C^{k+1}, column by column from naive_coboundary.
Matrix naive_coboundary_matrix(const NaiveRepresentation& rho, std::size_t k, std::size_t cap = kDefaultCochainCap);

BettiReport naive_betti(const NaiveRepresentation& rho, std::size_t kmax, std::size_t cap = kDefaultCochainCap);

struct DegreeComparison {
    std::size_t k = 0;
    std::size_t dim_naive = 0;
    std::size_t dim_classical = 0;
    bool equal = false;
    bool informational = false;  // degree 0 is reported but not compared
};

struct ComparisonReport {
    std::string branch;
    std::vector<DegreeComparison> degrees;
    /// Cochain-level correspondence checks (empty when not applicable).
    IdentityReport correspondence;

    bool all_equal() const;
};

ComparisonReport compare_betti(const BettiReport& naive, const BettiReport& classical, std::string branch);

/// H_naive(g) against H(g; trivial). Uses ρ = 0 when [g,g] = g and otherwise
/// the first basis vector of trivial_naive_space.
ComparisonReport compare_trivial(const LeibnizAlgebra& g, std::size_t kmax, std::size_t cap = kDefaultCochainCap);

/// Same comparison with a caller-chosen ξ (must annihilate [g,g], nonzero).
ComparisonReport compare_trivial_with(const LeibnizAlgebra& g, const Vector& xi, std::size_t kmax,
                                      std::size_t cap = kDefaultCochainCap);

/// H_naive(g; ad) against H(g; ad_L, ad_R), plus the cochain-level check
/// δ(ad_L∘𝔣, 𝔣) = (ad_L∘∂𝔣, ∂𝔣) on every basis cochain 𝔣 of degree <= kmax.
ComparisonReport compare_adjoint(const LeibnizAlgebra& g, std::size_t kmax, std::size_t cap = kDefaultCochainCap);

/// (V, l, r) with l_x u = φ(θ(x)) u and r_x u = φ(u) θ(x).
Representation graph_representation(const NaiveRepresentation& rho, const GraphMap& phi);

/// Requires graph_check(φ) and φ(e_i) part of ρ equal to φ(θ(e_i)) for all i
/// (CheckFailure otherwise). Compares H_naive(g; ρ) with H(g; l, r) and, when
/// Im ρ is the whole graph, checks δ(φ∘𝔣 + 𝔣) = φ∘∂𝔣 + ∂𝔣 on basis cochains.
ComparisonReport graph_rep_cohomology(const NaiveRepresentation& rho, const GraphMap& phi, std::size_t kmax,
                                      std::size_t cap = kDefaultCochainCap);

}  // namespace leibniz
