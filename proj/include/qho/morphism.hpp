#ifndef QHO_MORPHISM_HPP
#define QHO_MORPHISM_HPP

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "qho/space.hpp"

namespace qho {

using cplx = std::complex<double>;

/// Default maximum absolute deviation accepted by the exactness checks.
inline constexpr double default_tolerance = 1e-10;

/// A dom/cod-typed dense complex matrix, row-major, cod.dim() rows by
/// dom.dim() cols. Zero-dimensional shapes are legal (empty entries).
/// Immutable by convention once built; every operation returns a new value.
struct Morphism {
    SpaceObject dom;
    SpaceObject cod;
    std::vector<cplx> entries;

    Morphism() = default;
    Morphism(SpaceObject dom_, SpaceObject cod_)
        : dom(std::move(dom_)), cod(std::move(cod_)), entries(dom.dim() * cod.dim()) {}

    std::size_t rows() const { return cod.dim(); }
    std::size_t cols() const { return dom.dim(); }

    cplx& at(std::size_t r, std::size_t c) { return entries[r * cols() + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return entries[r * cols() + c]; }

    bool is_scalar() const { return rows() == 1 && cols() == 1; }
    cplx scalar_value() const { return entries.at(0); }

    /// Validates shape and entry finiteness; throws InvariantViolation.
    static Morphism checked(SpaceObject dom, SpaceObject cod, std::vector<cplx> entries);
};

Morphism identity(const SpaceObject& a);
Morphism zero_morphism(const SpaceObject& a, const SpaceObject& b);

/// Matrix product g . f for f: A -> B, g: B -> C. Throws DomainMismatch
/// unless cod(f) == dom(g) structurally.
Morphism compose(const Morphism& g, const Morphism& f);

/// Kronecker product with composite index i*dim(right)+j.
Morphism tensor(const Morphism& f, const Morphism& g);

Morphism add(const Morphism& f, const Morphism& g);
Morphism sub(const Morphism& f, const Morphism& g);
Morphism scalar_mul(cplx s, const Morphism& f);

/// Block diagonal sum; dom/cod are biproducts of the arguments' spaces.
Morphism direct_sum(const Morphism& f, const Morphism& g);

/// The symmetry A(x)B -> B(x)A as a permutation matrix.
Morphism swap_morphism(const SpaceObject& a, const SpaceObject& b);

/// Canonical isometric injection of part n into the biproduct of `parts`,
/// and its adjoint projection.
Morphism injection(const std::vector<SpaceObject>& parts, std::size_t n);
Morphism projection(const std::vector<SpaceObject>& parts, std::size_t n);

/// Conjugate transpose, dom/cod swapped.
Morphism dagger(const Morphism& f);

/// Entrywise conjugation f_*: A* -> B* (the covariant conjugation functor).
Morphism conjugate(const Morphism& f);

/// Matrix transpose f*: B* -> A*.
Morphism transpose_of(const Morphism& f);

/// Name of f: A -> B, the vectorisation I -> B (x) A*.
Morphism name_of(const Morphism& f);

/// Compact-closure unit zeta: I -> A (x) A* and counit theta: A* (x) A -> I.
std::pair<Morphism, Morphism> duality_pair(const SpaceObject& a);

/// Re-tags dom/cod without touching entries; dims must match.
Morphism cast(const Morphism& f, SpaceObject new_dom, SpaceObject new_cod);

/// 1x1 morphism I -> I holding the scalar s.
Morphism scalar(cplx s);

/// Basis state e_k: I -> A.
Morphism basis_state(const SpaceObject& a, std::size_t k);

double max_abs(const Morphism& f);

/// Max absolute entrywise difference. Throws DomainMismatch on shape or
/// structure disagreement: comparing differently-typed morphisms is a bug.
double max_abs_diff(const Morphism& f, const Morphism& g);

/// Frobenius inner product restricted to vectors: <f, g> = f^dag . g.
cplx inner_product(const Morphism& f, const Morphism& g);

}  // namespace qho

#endif
