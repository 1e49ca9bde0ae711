#include "qho/presentations.hpp"

#include <algorithm>
#include <vector>

#include "qho/kernels.hpp"

namespace qho {

double comonoid_laws_residual(const ComonoidPresentation& co) {
    const Morphism id = identity(co.carrier);
    const Morphism& g = co.comult;
    const Morphism& u = co.counit;
    const std::size_t n = co.carrier.dim();

    double r = 0.0;

    // coassociativity, one comultiplied column at a time: forming g (x) id
    // outright needs dim^3 by dim^2 storage
    {
        std::vector<cplx> gt(n * n * n);  // plain transpose of g, n x n^2
        for (std::size_t row = 0; row < n * n; ++row) {
            for (std::size_t col = 0; col < n; ++col) gt[col * n * n + row] = g.at(row, col);
        }
        std::vector<cplx> v(n * n), left(n * n * n), right(n * n * n);
        for (std::size_t col = 0; col < n; ++col) {
            for (std::size_t row = 0; row < n * n; ++row) v[row] = g.at(row, col);
            // (g (x) id) v = vec(g . V), (id (x) g) v = vec(V . g^T)
            kern::matmul(left.data(), g.entries.data(), v.data(), n * n, n, n);
            kern::matmul(right.data(), v.data(), gt.data(), n, n, n * n);
            for (std::size_t i = 0; i < left.size(); ++i) {
                r = std::max(r, std::abs(left[i] - right[i]));
            }
        }
    }

    r = std::max(r, max_abs_diff(compose(tensor(u, id), g), id));
    r = std::max(r, max_abs_diff(compose(tensor(id, u), g), id));

    const Morphism sw = swap_morphism(co.carrier, co.carrier);
    r = std::max(r, max_abs_diff(compose(sw, g), g));
    return r;
}

double monoid_laws_residual(const MonoidPresentation& mono) {
    const Morphism id = identity(mono.carrier);
    const Morphism& h = mono.mult;
    const Morphism& v = mono.unit;

    const Morphism left = compose(h, tensor(h, id));
    const Morphism right = compose(h, tensor(id, h));
    double r = max_abs_diff(left, right);

    r = std::max(r, max_abs_diff(compose(h, tensor(v, id)), id));
    r = std::max(r, max_abs_diff(compose(h, tensor(id, v)), id));

    if (mono.commutative) {
        const Morphism sw = swap_morphism(mono.carrier, mono.carrier);
        r = std::max(r, max_abs_diff(compose(h, sw), h));
    }
    return r;
}

ComonoidPresentation unit_comonoid() {
    const SpaceObject i = SpaceObject::unit();
    Morphism comult(i, SpaceObject::tensor(i, i));
    comult.entries[0] = 1.0;
    return {i, comult, identity(i)};
}

ComonoidPresentation copy_comonoid(const SpaceObject& a) {
    const std::size_t d = a.dim();
    Morphism comult(a, SpaceObject::tensor(a, a));
    Morphism counit(a, SpaceObject::unit());
    for (std::size_t i = 0; i < d; ++i) {
        comult.at(i * d + i, i) = 1.0;
        counit.at(0, i) = 1.0;
    }
    return {a, comult, counit};
}

}  // namespace qho
