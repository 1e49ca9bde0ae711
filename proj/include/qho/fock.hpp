#ifndef QHO_FOCK_HPP
#define QHO_FOCK_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "qho/presentations.hpp"
#include "qho/symtensor.hpp"

namespace qho {

/// Scalar data of the ladder-style adjunction. The standard family makes the
/// ladder functor a free commutative comonoid with unitary product
/// preservation; the members are replaceable for experiments (and for the
/// negative controls in the verification suite).
///
/// Constraints satisfied by the standard family:
///   B(m,n)^2 = (m+n)!/(m!n!),  |C| = |L| = 1,
///   K(0) = C,  K(1) = L,  (n+1) K(n+1)^2 = K(n)^2.
struct LadderCoefficients {
    std::function<double(std::size_t, std::size_t)> B = [](std::size_t m, std::size_t n) {
        return std::sqrt(static_cast<double>(binom(m + n, m)));
    };
    double C = 1.0;
    std::function<double(std::size_t)> K = [](std::size_t n) {
        return 1.0 / std::sqrt(factorial(n));
    };
    double L = 1.0;
};

/// Graded space (+)_{n<=N} S_n(A) with per-sector bookkeeping.
struct FockSpace {
    SpaceObject base;
    std::size_t cutoff;
    std::vector<std::size_t> sector_dims;
    std::vector<std::size_t> offsets;  // prefix sums of sector_dims
    SpaceObject object;                // Fock-tagged

    std::size_t dim() const { return object.dim(); }
    SpaceObject sector_object(std::size_t n) const { return symmetric_space(base, n).object; }
};

FockSpace fock_space(const SpaceObject& a, std::size_t cutoff);

/// p^n: F(A) -> S_n(A), the block row selector; its dagger is the injection.
Morphism sector_projection(const FockSpace& f, std::size_t n);
Morphism sector_injection(const FockSpace& f, std::size_t n);

/// F(f): block diagonal (+)_n S_n(f). Cutoffs must agree.
Morphism fock_map(const FockSpace& f_dom, const FockSpace& f_cod, const Morphism& f);

/// Comultiplication d: F(A) -> F(A)(x)F(A), all splits of total degree <= N.
Morphism comultiplication(const FockSpace& f, const LadderCoefficients& lc = {});

/// Counit e = C.p^0 and single-particle extraction eps = L.p^1.
Morphism counit_e(const FockSpace& f, const LadderCoefficients& lc = {});
Morphism epsilon_single(const FockSpace& f, const LadderCoefficients& lc = {});

/// e^dag: I -> F(A), the zero-particle state.
Morphism vacuum_state(const FockSpace& f, const LadderCoefficients& lc = {});

/// n-fold comultiplication g^{n-1}: A -> A^(x)n (counit for n = 0, identity
/// for n = 1), and the dual n-fold multiplication A^(x)n -> A.
Morphism iterated_comult(const Morphism& comult, const Morphism& counit, std::size_t n);
Morphism iterated_mult(const Morphism& mult, const Morphism& unit, std::size_t n);

/// Unit of the adjunction at a comonoid: A -> F(A), truncated at the cutoff.
/// Validates the comonoid laws first; throws LawViolation on failure.
Morphism eta_comonoid(const ComonoidPresentation& co, std::size_t cutoff,
                      const LadderCoefficients& lc = {}, double tolerance = default_tolerance);

/// The product-preservation coisometry k: F(A(+)B) -> F(A)(x)F(B); its
/// dagger embeds onto the total-degree <= N subspace.
Morphism k_decompose(const SpaceObject& a, const SpaceObject& b, std::size_t cutoff,
                     const LadderCoefficients& lc = {});

/// Raising a^dag_phi and lowering a_phi for a single-particle state
/// phi: I -> A, truncated to keep every intermediate sector <= N.
Morphism raising(const FockSpace& f, const Morphism& phi, const LadderCoefficients& lc = {});
Morphism lowering(const FockSpace& f, const Morphism& phi, const LadderCoefficients& lc = {});

/// Stage of the lowering natural transformation, a = (id (x) eps) . d.
Morphism lowering_stage(const FockSpace& f, const LadderCoefficients& lc = {});

/// Coh(phi): I -> F(A) with sector-n component K(n).s^n(phi^(x)n).
Morphism coherent_state(const FockSpace& f, const Morphism& phi,
                        const LadderCoefficients& lc = {});

/// Diagonal projector keeping indices of total degree <= k.
Morphism total_degree_mask(const SpaceObject& space, std::size_t k);

/// Zeroes every component whose row or column index exceeds total degree k.
Morphism restrict_total_degree(const Morphism& m, std::size_t k);

/// (F(A), d, e) packaged as a comonoid presentation.
ComonoidPresentation fock_comonoid(const FockSpace& f, const LadderCoefficients& lc = {});

}  // namespace qho

#endif
