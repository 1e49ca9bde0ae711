#ifndef QHO_PRESENTATIONS_HPP
#define QHO_PRESENTATIONS_HPP

#include "qho/morphism.hpp"

namespace qho {

/// Internal cocommutative comonoid: carrier A with comult A -> A(x)A and
/// counit A -> I.
struct ComonoidPresentation {
    SpaceObject carrier;
    Morphism comult;
    Morphism counit;
};

/// Internal monoid: carrier A with mult A(x)A -> A and unit I -> A.
struct MonoidPresentation {
    SpaceObject carrier;
    Morphism mult;
    Morphism unit;
    bool commutative = false;
};

/// Max residual over the coassociativity, both counit, and cocommutativity
/// laws. Zero (to rounding) iff the presentation is a valid cocommutative
/// comonoid.
double comonoid_laws_residual(const ComonoidPresentation& co);

/// Max residual over associativity and the unit laws, plus commutativity
/// when the presentation claims it.
double monoid_laws_residual(const MonoidPresentation& mono);

/// The trivial comonoid on the monoidal unit.
ComonoidPresentation unit_comonoid();

/// The basis-copying comonoid a space inherits from its biproduct
/// decomposition into one-dimensional summands: e_i -> e_i (x) e_i, e_i -> 1.
ComonoidPresentation copy_comonoid(const SpaceObject& a);

}  // namespace qho

#endif
