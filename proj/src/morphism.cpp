#include "qho/morphism.hpp"

#include <cmath>
#include <cstring>

#include "qho/errors.hpp"
#include "qho/kernels.hpp"

namespace qho {

Morphism Morphism::checked(SpaceObject dom, SpaceObject cod, std::vector<cplx> entries) {
    if (entries.size() != dom.dim() * cod.dim()) {
        throw InvariantViolation("entry count " + std::to_string(entries.size()) +
                                 " does not match shape " + std::to_string(cod.dim()) + "x" +
                                 std::to_string(dom.dim()));
    }
    for (const cplx& z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvariantViolation("non-finite entry in morphism");
        }
    }
    Morphism m;
    m.dom = std::move(dom);
    m.cod = std::move(cod);
    m.entries = std::move(entries);
    return m;
}

Morphism identity(const SpaceObject& a) {
    Morphism m(a, a);
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1.0;
    return m;
}

Morphism zero_morphism(const SpaceObject& a, const SpaceObject& b) {
    return Morphism(a, b);
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (f.cod != g.dom) {
        throw DomainMismatch("compose: cod " + f.cod.describe() + " does not match dom " +
                             g.dom.describe());
    }
    Morphism m(f.dom, g.cod);
    kern::matmul(m.entries.data(), g.entries.data(), f.entries.data(), g.rows(), g.cols(),
                 f.cols());
    return m;
}

Morphism tensor(const Morphism& f, const Morphism& g) {
    Morphism m(SpaceObject::tensor(f.dom, g.dom), SpaceObject::tensor(f.cod, g.cod));
    kern::kron(m.entries.data(), f.entries.data(), f.rows(), f.cols(), g.entries.data(), g.rows(),
               g.cols());
    return m;
}

Morphism add(const Morphism& f, const Morphism& g) {
    if (f.dom != g.dom || f.cod != g.cod) {
        throw DomainMismatch("add: shapes " + f.cod.describe() + "<-" + f.dom.describe() +
                             " vs " + g.cod.describe() + "<-" + g.dom.describe());
    }
    Morphism m = f;
    for (std::size_t i = 0; i < m.entries.size(); ++i) m.entries[i] += g.entries[i];
    return m;
}

Morphism sub(const Morphism& f, const Morphism& g) {
    return add(f, scalar_mul(-1.0, g));
}

Morphism scalar_mul(cplx s, const Morphism& f) {
    Morphism m = f;
    for (auto& z : m.entries) z *= s;
    return m;
}

Morphism direct_sum(const Morphism& f, const Morphism& g) {
    Morphism m(SpaceObject::biproduct({f.dom, g.dom}), SpaceObject::biproduct({f.cod, g.cod}));
    for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c) m.at(r, c) = f.at(r, c);
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c) m.at(f.rows() + r, f.cols() + c) = g.at(r, c);
    return m;
}

Morphism swap_morphism(const SpaceObject& a, const SpaceObject& b) {
    Morphism m(SpaceObject::tensor(a, b), SpaceObject::tensor(b, a));
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < db; ++j) {
            m.at(j * da + i, i * db + j) = 1.0;
        }
    }
    return m;
}

Morphism injection(const std::vector<SpaceObject>& parts, std::size_t n) {
    if (n >= parts.size()) {
        throw IndexOutOfRange("injection: part " + std::to_string(n) + " of " +
                              std::to_string(parts.size()));
    }
    std::size_t offset = 0;
    for (std::size_t i = 0; i < n; ++i) offset += parts[i].dim();
    Morphism m(parts[n], SpaceObject::biproduct(parts));
    for (std::size_t i = 0; i < parts[n].dim(); ++i) m.at(offset + i, i) = 1.0;
    return m;
}

Morphism projection(const std::vector<SpaceObject>& parts, std::size_t n) {
    return dagger(injection(parts, n));
}

Morphism dagger(const Morphism& f) {
    Morphism m(f.cod, f.dom);
    kern::adjoint(m.entries.data(), f.entries.data(), f.rows(), f.cols());
    return m;
}

Morphism conjugate(const Morphism& f) {
    Morphism m(SpaceObject::dual(f.dom), SpaceObject::dual(f.cod));
    for (std::size_t i = 0; i < f.entries.size(); ++i) m.entries[i] = std::conj(f.entries[i]);
    return m;
}

Morphism transpose_of(const Morphism& f) {
    Morphism m(SpaceObject::dual(f.cod), SpaceObject::dual(f.dom));
    for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c) m.at(c, r) = f.at(r, c);
    return m;
}

Morphism name_of(const Morphism& f) {
    Morphism m(SpaceObject::unit(), SpaceObject::tensor(f.cod, SpaceObject::dual(f.dom)));
    std::memcpy(m.entries.data(), f.entries.data(), f.entries.size() * sizeof(cplx));
    return m;
}

std::pair<Morphism, Morphism> duality_pair(const SpaceObject& a) {
    const std::size_t d = a.dim();
    SpaceObject astar = SpaceObject::dual(a);
    Morphism zeta(SpaceObject::unit(), SpaceObject::tensor(a, astar));
    Morphism theta(SpaceObject::tensor(astar, a), SpaceObject::unit());
    for (std::size_t n = 0; n < d; ++n) {
        zeta.at(n * d + n, 0) = 1.0;
        theta.at(0, n * d + n) = 1.0;
    }
    return {zeta, theta};
}

Morphism cast(const Morphism& f, SpaceObject new_dom, SpaceObject new_cod) {
    if (new_dom.dim() != f.cols() || new_cod.dim() != f.rows()) {
        throw DomainMismatch("cast: dims must be preserved");
    }
    Morphism m = f;
    m.dom = std::move(new_dom);
    m.cod = std::move(new_cod);
    return m;
}

Morphism scalar(cplx s) {
    Morphism m(SpaceObject::unit(), SpaceObject::unit());
    m.entries[0] = s;
    return m;
}

Morphism basis_state(const SpaceObject& a, std::size_t k) {
    if (k >= a.dim()) throw IndexOutOfRange("basis_state: index " + std::to_string(k));
    Morphism m(SpaceObject::unit(), a);
    m.entries[k] = 1.0;
    return m;
}

double max_abs(const Morphism& f) {
    double m = 0.0;
    for (const cplx& z : f.entries) m = std::max(m, std::abs(z));
    return m;
}

double max_abs_diff(const Morphism& f, const Morphism& g) {
    if (f.dom != g.dom || f.cod != g.cod) {
        throw DomainMismatch("max_abs_diff: comparing " + f.cod.describe() + "<-" +
                             f.dom.describe() + " with " + g.cod.describe() + "<-" +
                             g.dom.describe());
    }
    double m = 0.0;
    for (std::size_t i = 0; i < f.entries.size(); ++i) {
        m = std::max(m, std::abs(f.entries[i] - g.entries[i]));
    }
    return m;
}

cplx inner_product(const Morphism& f, const Morphism& g) {
    if (f.dom != g.dom || f.cod != g.cod) {
        throw DomainMismatch("inner_product: mismatched shapes");
    }
    cplx acc = 0.0;
    for (std::size_t i = 0; i < f.entries.size(); ++i) {
        acc += std::conj(f.entries[i]) * g.entries[i];
    }
    return acc;
}

}  // namespace qho
