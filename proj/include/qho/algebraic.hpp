#ifndef QHO_ALGEBRAIC_HPP
#define QHO_ALGEBRAIC_HPP

#include "qho/presentations.hpp"

namespace qho {

/// Adjoints of the structure maps turn comonoids into monoids and back.
MonoidPresentation dagger_flip(const ComonoidPresentation& co, bool commutative = true);
ComonoidPresentation dagger_flip(const MonoidPresentation& mono);

/// exp(phi) = sum_{m<=order} (1/m!) g^{m-1} . phi^(x)m over a commutative
/// monoid. Throws LawViolation when the presentation is not flagged
/// commutative, DomainMismatch when phi is not I -> carrier.
Morphism monoid_exp(const MonoidPresentation& mono, const Morphism& phi, std::size_t order);

/// Names of endomorphisms on A as a (noncommutative) monoid on A (x) A*:
/// multiplication contracts adjacent name legs, unit is the name of id.
MonoidPresentation endo_monoid(const SpaceObject& a);

/// Canonical monic embedding N -> N (x) N* of any monoid into the
/// endomorphism monoid on its carrier: x -> name of (multiply by x).
Morphism monoid_embed(const MonoidPresentation& mono);

/// Truncated endomorphism exponential sum_{m<=order} f^m / m!.
Morphism endo_exp(const Morphism& f, std::size_t order);

/// Coordinatewise product monoid on C^d with unit (1,...,1).
MonoidPresentation elementwise_monoid(std::size_t d);

}  // namespace qho

#endif
