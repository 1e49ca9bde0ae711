#include "qho/algebraic.hpp"

#include "qho/errors.hpp"

namespace qho {

MonoidPresentation dagger_flip(const ComonoidPresentation& co, bool commutative) {
    return {co.carrier, dagger(co.comult), dagger(co.counit), commutative};
}

ComonoidPresentation dagger_flip(const MonoidPresentation& mono) {
    return {mono.carrier, dagger(mono.mult), dagger(mono.unit)};
}

Morphism monoid_exp(const MonoidPresentation& mono, const Morphism& phi, std::size_t order) {
    if (!mono.commutative) {
        throw LawViolation("monoid_exp: requires a commutative monoid; embed through a "
                           "commutative one for the general case");
    }
    if (phi.dom != SpaceObject::unit() || phi.cod != mono.carrier) {
        throw DomainMismatch("monoid_exp: element must be I -> " + mono.carrier.describe());
    }
    Morphism acc = cast(mono.unit, SpaceObject::unit(), mono.carrier);  // m = 0 term
    Morphism power = phi;  // g^{m-1} . phi^(x)m, folded one factor at a time
    double inv_factorial = 1.0;
    for (std::size_t m = 1; m <= order; ++m) {
        if (m > 1) power = compose(mono.mult, tensor(power, phi));
        inv_factorial /= static_cast<double>(m);
        acc = add(acc, scalar_mul(inv_factorial, power));
    }
    return acc;
}

MonoidPresentation endo_monoid(const SpaceObject& a) {
    const auto [zeta, theta] = duality_pair(a);
    const SpaceObject astar = SpaceObject::dual(a);
    const SpaceObject carrier = SpaceObject::tensor(a, astar);
    const Morphism mult =
        cast(tensor(tensor(identity(a), theta), identity(astar)),
             SpaceObject::tensor(carrier, carrier), carrier);
    return {carrier, mult, zeta, false};
}

Morphism monoid_embed(const MonoidPresentation& mono) {
    const SpaceObject& n = mono.carrier;
    const auto [zeta, theta] = duality_pair(n);
    const SpaceObject nstar = SpaceObject::dual(n);
    return compose(tensor(mono.mult, identity(nstar)), tensor(identity(n), zeta));
}

Morphism endo_exp(const Morphism& f, std::size_t order) {
    if (f.dom != f.cod) {
        throw DomainMismatch("endo_exp: endomorphism required, got " + f.cod.describe() + "<-" +
                             f.dom.describe());
    }
    Morphism acc = identity(f.dom);
    Morphism term = identity(f.dom);
    for (std::size_t m = 1; m <= order; ++m) {
        term = scalar_mul(1.0 / static_cast<double>(m), compose(term, f));
        acc = add(acc, term);
    }
    return acc;
}

MonoidPresentation elementwise_monoid(std::size_t d) {
    const SpaceObject a = SpaceObject::base(d);
    Morphism mult(SpaceObject::tensor(a, a), a);
    Morphism unit(SpaceObject::unit(), a);
    for (std::size_t i = 0; i < d; ++i) {
        mult.at(i, i * d + i) = 1.0;
        unit.entries[i] = 1.0;
    }
    return {a, mult, unit, true};
}

}  // namespace qho
