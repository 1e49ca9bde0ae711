#include "qho/fock.hpp"

#include <utility>

#include "qho/errors.hpp"

namespace qho {

FockSpace fock_space(const SpaceObject& a, std::size_t cutoff) {
    FockSpace f;
    f.base = a;
    f.cutoff = cutoff;
    std::size_t total = 0;
    for (std::size_t n = 0; n <= cutoff; ++n) {
        const std::size_t dn = (n == 0) ? 1 : static_cast<std::size_t>(binom(a.dim() + n - 1, n));
        f.offsets.push_back(total);
        f.sector_dims.push_back(dn);
        total += dn;
    }
    f.object = SpaceObject::fock(a, cutoff, total);
    return f;
}

Morphism sector_projection(const FockSpace& f, std::size_t n) {
    if (n > f.cutoff) {
        throw IndexOutOfRange("sector " + std::to_string(n) + " above cutoff " +
                              std::to_string(f.cutoff));
    }
    Morphism p(f.object, f.sector_object(n));
    for (std::size_t i = 0; i < f.sector_dims[n]; ++i) p.at(i, f.offsets[n] + i) = 1.0;
    return p;
}

Morphism sector_injection(const FockSpace& f, std::size_t n) {
    return dagger(sector_projection(f, n));
}

Morphism fock_map(const FockSpace& f_dom, const FockSpace& f_cod, const Morphism& f) {
    if (f_dom.cutoff != f_cod.cutoff) throw DomainMismatch("fock_map: cutoffs differ");
    if (f.dom != f_dom.base || f.cod != f_cod.base) {
        throw DomainMismatch("fock_map: morphism " + f.cod.describe() + "<-" + f.dom.describe() +
                             " does not connect the bases");
    }
    Morphism out(f_dom.object, f_cod.object);
    for (std::size_t n = 0; n <= f_dom.cutoff; ++n) {
        const Morphism block = sym_power(f, n);
        for (std::size_t r = 0; r < block.rows(); ++r) {
            for (std::size_t c = 0; c < block.cols(); ++c) {
                out.at(f_cod.offsets[n] + r, f_dom.offsets[n] + c) = block.at(r, c);
            }
        }
    }
    return out;
}

Morphism comultiplication(const FockSpace& f, const LadderCoefficients& lc) {
    const std::size_t total = f.dim();
    Morphism d(f.object, SpaceObject::tensor(f.object, f.object));

    std::vector<std::pair<std::size_t, std::size_t>> splits;
    for (std::size_t m = 0; m <= f.cutoff; ++m) {
        for (std::size_t n = 0; m + n <= f.cutoff; ++n) splits.emplace_back(m, n);
    }

    // Blocks land in disjoint regions, one per (m, n) split.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(splits.size()); ++idx) {
        const auto [m, n] = splits[static_cast<std::size_t>(idx)];
        const Morphism block =
            scalar_mul(lc.B(m, n),
                       compose(tensor(sym_isometry(f.base, m), sym_isometry(f.base, n)),
                               sym_isometry_dag(f.base, m + n)));
        const std::size_t dn = f.sector_dims[n];
        for (std::size_t a = 0; a < f.sector_dims[m]; ++a) {
            for (std::size_t b = 0; b < dn; ++b) {
                const std::size_t row = (f.offsets[m] + a) * total + f.offsets[n] + b;
                for (std::size_t c = 0; c < f.sector_dims[m + n]; ++c) {
                    d.at(row, f.offsets[m + n] + c) = block.at(a * dn + b, c);
                }
            }
        }
    }
    return d;
}

Morphism counit_e(const FockSpace& f, const LadderCoefficients& lc) {
    return scalar_mul(lc.C, sector_projection(f, 0));
}

Morphism epsilon_single(const FockSpace& f, const LadderCoefficients& lc) {
    return scalar_mul(lc.L, sector_projection(f, 1));
}

Morphism vacuum_state(const FockSpace& f, const LadderCoefficients& lc) {
    return dagger(counit_e(f, lc));
}

Morphism iterated_comult(const Morphism& comult, const Morphism& counit, std::size_t n) {
    if (n == 0) return counit;
    const SpaceObject& a = comult.dom;
    if (n == 1) return identity(a);
    Morphism acc = comult;  // A -> A^(x)2
    for (std::size_t legs = 2; legs < n; ++legs) {
        acc = compose(tensor(comult, identity(tensor_power_space(a, legs - 1))), acc);
    }
    return acc;
}

Morphism iterated_mult(const Morphism& mult, const Morphism& unit, std::size_t n) {
    if (n == 0) return unit;
    const SpaceObject& a = mult.cod;
    if (n == 1) return identity(a);
    Morphism acc = mult;  // A^(x)2 -> A
    for (std::size_t legs = 2; legs < n; ++legs) {
        acc = compose(acc, tensor(mult, identity(tensor_power_space(a, legs - 1))));
    }
    return acc;
}

Morphism eta_comonoid(const ComonoidPresentation& co, std::size_t cutoff,
                      const LadderCoefficients& lc, double tolerance) {
    const double residual = comonoid_laws_residual(co);
    if (!(residual <= tolerance)) {
        throw LawViolation("eta_comonoid: presentation on " + co.carrier.describe() +
                           " violates the comonoid laws (residual " + std::to_string(residual) +
                           ")");
    }
    const FockSpace f = fock_space(co.carrier, cutoff);
    Morphism eta(co.carrier, f.object);
    for (std::size_t n = 0; n <= cutoff; ++n) {
        const Morphism component =
            scalar_mul(lc.K(n), compose(sym_isometry(co.carrier, n),
                                        iterated_comult(co.comult, co.counit, n)));
        for (std::size_t r = 0; r < component.rows(); ++r) {
            for (std::size_t c = 0; c < component.cols(); ++c) {
                eta.at(f.offsets[n] + r, c) = component.at(r, c);
            }
        }
    }
    return eta;
}

Morphism k_decompose(const SpaceObject& a, const SpaceObject& b, std::size_t cutoff,
                     const LadderCoefficients& lc) {
    const std::vector<SpaceObject> parts{a, b};
    const SpaceObject ab = SpaceObject::biproduct(parts);
    const FockSpace fa = fock_space(a, cutoff);
    const FockSpace fb = fock_space(b, cutoff);
    const FockSpace fab = fock_space(ab, cutoff);
    const Morphism pi_a = projection(parts, 0);
    const Morphism pi_b = projection(parts, 1);

    Morphism k(fab.object, SpaceObject::tensor(fa.object, fb.object));
    const std::size_t total_b = fb.dim();

    std::vector<std::pair<std::size_t, std::size_t>> splits;
    for (std::size_t p = 0; p <= cutoff; ++p) {
        for (std::size_t q = 0; p + q <= cutoff; ++q) splits.emplace_back(p, q);
    }

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(splits.size()); ++idx) {
        const auto [p, q] = splits[static_cast<std::size_t>(idx)];
        // S_{p+q}(A(+)B) -> S_p(A)(x)S_q(B): desymmetrise, keep the component
        // with p factors in A followed by q in B, resymmetrise per side.
        const Morphism select = tensor(tensor_power(pi_a, p), tensor_power(pi_b, q));
        const Morphism block = scalar_mul(
            lc.B(p, q), compose(tensor(sym_isometry(a, p), sym_isometry(b, q)),
                                compose(select, sym_isometry_dag(ab, p + q))));
        const std::size_t dq = fb.sector_dims[q];
        for (std::size_t r = 0; r < fa.sector_dims[p]; ++r) {
            for (std::size_t s = 0; s < dq; ++s) {
                const std::size_t row = (fa.offsets[p] + r) * total_b + fb.offsets[q] + s;
                for (std::size_t c = 0; c < fab.sector_dims[p + q]; ++c) {
                    k.at(row, fab.offsets[p + q] + c) = block.at(r * dq + s, c);
                }
            }
        }
    }
    return k;
}

Morphism raising(const FockSpace& f, const Morphism& phi, const LadderCoefficients& lc) {
    if (phi.dom != SpaceObject::unit() || phi.cod != f.base) {
        throw DomainMismatch("raising: state must be I -> " + f.base.describe() + ", got " +
                             phi.cod.describe() + "<-" + phi.dom.describe());
    }
    Morphism out(f.object, f.object);
    for (std::size_t n = 0; n + 1 <= f.cutoff; ++n) {
        // S_n -> S_{n+1}: adjoin one particle in state phi
        const Morphism block =
            scalar_mul(lc.B(1, n), compose(sym_isometry(f.base, n + 1),
                                           tensor(phi, sym_isometry_dag(f.base, n))));
        for (std::size_t r = 0; r < block.rows(); ++r) {
            for (std::size_t c = 0; c < block.cols(); ++c) {
                out.at(f.offsets[n + 1] + r, f.offsets[n] + c) = block.at(r, c);
            }
        }
    }
    return out;
}

Morphism lowering(const FockSpace& f, const Morphism& phi, const LadderCoefficients& lc) {
    return dagger(raising(f, phi, lc));
}

Morphism lowering_stage(const FockSpace& f, const LadderCoefficients& lc) {
    const Morphism d = comultiplication(f, lc);
    return compose(tensor(identity(f.object), epsilon_single(f, lc)), d);
}

Morphism coherent_state(const FockSpace& f, const Morphism& phi, const LadderCoefficients& lc) {
    if (phi.dom != SpaceObject::unit() || phi.cod != f.base) {
        throw DomainMismatch("coherent_state: state must be I -> " + f.base.describe());
    }
    Morphism out(SpaceObject::unit(), f.object);
    for (std::size_t n = 0; n <= f.cutoff; ++n) {
        const Morphism component =
            scalar_mul(lc.K(n), compose(sym_isometry(f.base, n), tensor_power(phi, n)));
        for (std::size_t r = 0; r < component.rows(); ++r) {
            out.entries[f.offsets[n] + r] = component.entries[r];
        }
    }
    return out;
}

Morphism total_degree_mask(const SpaceObject& space, std::size_t k) {
    Morphism m(space, space);
    for (std::size_t i = 0; i < space.dim(); ++i) {
        if (index_degree(space, i) <= k) m.at(i, i) = 1.0;
    }
    return m;
}

Morphism restrict_total_degree(const Morphism& m, std::size_t k) {
    Morphism out = m;
    std::vector<bool> keep_col(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) keep_col[c] = index_degree(m.dom, c) <= k;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const bool keep_row = index_degree(m.cod, r) <= k;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!keep_row || !keep_col[c]) out.at(r, c) = 0.0;
        }
    }
    return out;
}

ComonoidPresentation fock_comonoid(const FockSpace& f, const LadderCoefficients& lc) {
    return {f.object, comultiplication(f, lc), counit_e(f, lc)};
}

}  // namespace qho
