// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// hold. Tolerances are pinned here; the grid is d in {1,2,3}, N in {2,3,4}
// unless a criterion narrows it.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qho/algebraic.hpp"
#include "qho/laws.hpp"

using namespace qho;

namespace {

constexpr double kExact = 1e-10;
constexpr double kTight = 1e-12;

const std::vector<std::size_t> kDims{1, 2, 3};
const std::vector<std::size_t> kCutoffs{2, 3, 4};
constexpr std::size_t kPairs = 20;

struct Outcome {
    bool passed;
    double worst;
    std::string note;
};

laws::Rng& rng() {
    static laws::Rng generator(2024);
    return generator;
}

Outcome criterion_ccr() {
    double worst = 0.0;
    double best_control = 1e300;
    for (std::size_t d : kDims) {
        for (std::size_t n : kCutoffs) {
            const FockSpace f = fock_space(SpaceObject::base(d), n);
            double control = 0.0;
            for (std::size_t pair = 0; pair < kPairs; ++pair) {
                const Morphism phi = rng().state(f.base);
                const Morphism psi = rng().state(f.base);
                const Morphism lhs = compose(lowering(f, phi), raising(f, psi));
                const Morphism rhs =
                    add(compose(raising(f, psi), lowering(f, phi)),
                        scalar_mul(inner_product(phi, psi), identity(f.object)));
                worst = std::max(worst, max_abs_diff(restrict_total_degree(lhs, n - 1),
                                                     restrict_total_degree(rhs, n - 1)));
                control = std::max(control, max_abs_diff(lhs, rhs));
            }
            best_control = std::min(best_control, control);
        }
    }
    const bool ok = worst <= kExact && best_control > 1e-3;
    return {ok, worst,
            "masked residual " + std::to_string(worst) + ", truncation control " +
                std::to_string(best_control)};
}

Outcome criterion_comonoid_bialgebra() {
    double worst = 0.0;
    for (std::size_t d : kDims) {
        for (std::size_t n : kCutoffs) {
            const ComonoidPresentation co = fock_comonoid(fock_space(SpaceObject::base(d), n));
            worst = std::max(worst, laws::check_comonoid(co).max_abs_deviation);
            worst = std::max(worst, laws::check_bialgebra(co).max_abs_deviation);
        }
    }
    return {worst <= kExact, worst, ""};
}

Outcome criterion_additivity() {
    double worst = 0.0;
    for (std::size_t d : kDims) {
        for (std::size_t n : kCutoffs) {
            const SpaceObject a = SpaceObject::base(d);
            const FockSpace f = fock_space(a, n);
            const Morphism comult = comultiplication(f);
            const Morphism comult_dag = dagger(comult);
            for (std::size_t pair = 0; pair < kPairs; ++pair) {
                const Morphism p = rng().matrix(a, a);
                const Morphism q = rng().matrix(a, a);
                const Morphism rhs = compose(
                    comult_dag,
                    compose(tensor(fock_map(f, f, p), fock_map(f, f, q)), comult));
                worst = std::max(worst, max_abs_diff(fock_map(f, f, add(p, q)), rhs));
            }
        }
    }
    return {worst <= kExact, worst, ""};
}

Outcome criterion_orthonormality() {
    double worst = 0.0;
    for (std::size_t d : kDims) {
        for (std::size_t n : kCutoffs) {
            const FockSpace f = fock_space(SpaceObject::base(d), n);
            const Morphism e = counit_e(f);
            const Morphism eps = epsilon_single(f);
            worst = std::max(worst, max_abs_diff(compose(eps, dagger(eps)), identity(f.base)));
            worst = std::max(worst, std::abs(compose(e, dagger(e)).scalar_value() - 1.0));
            worst = std::max(worst, max_abs(compose(e, dagger(eps))));
        }
    }
    return {worst <= kTight, worst, ""};
}

Outcome criterion_product_iso() {
    double worst = 0.0;
    for (std::size_t da = 1; da <= 2; ++da) {
        for (std::size_t db = 1; db <= 2; ++db) {
            for (std::size_t n = 1; n <= 3; ++n) {
                const SpaceObject a = SpaceObject::base(da);
                const SpaceObject b = SpaceObject::base(db);
                const Morphism k = k_decompose(a, b, n);
                const FockSpace fab = fock_space(SpaceObject::biproduct({a, b}), n);
                worst = std::max(worst,
                                 max_abs_diff(compose(dagger(k), k), identity(fab.object)));
            }
        }
    }
    // comultiplication from the diagonal
    for (std::size_t d = 1; d <= 2; ++d) {
        for (std::size_t n = 1; n <= 3; ++n) {
            const SpaceObject a = SpaceObject::base(d);
            const FockSpace f = fock_space(a, n);
            const std::vector<SpaceObject> parts{a, a};
            const Morphism diag = add(injection(parts, 0), injection(parts, 1));
            const FockSpace fsum = fock_space(SpaceObject::biproduct(parts), n);
            const Morphism route = compose(k_decompose(a, a, n), fock_map(f, fsum, diag));
            worst = std::max(worst, max_abs_diff(route, comultiplication(f)));
        }
    }
    return {worst <= kExact, worst, ""};
}

Outcome criterion_coherent() {
    double worst = 0.0;
    double norm_dev = 0.0;
    for (std::size_t d : kDims) {
        for (std::size_t n : kCutoffs) {
            const FockSpace f = fock_space(SpaceObject::base(d), n);
            const Morphism comult = comultiplication(f);
            const Morphism e = counit_e(f);
            for (int trial = 0; trial < 5; ++trial) {
                const Morphism phi = rng().state(f.base);
                const Morphism coh = coherent_state(f, phi);
                worst = std::max(worst,
                                 max_abs_diff(compose(comult, coh),
                                              restrict_total_degree(tensor(coh, coh), n)));
                worst = std::max(worst, std::abs(compose(e, coh).scalar_value() - 1.0));

                const Morphism psi = rng().state(f.base);
                const Morphism applied = compose(lowering(f, psi), coh);
                const Morphism scaled = scalar_mul(inner_product(psi, phi), coh);
                worst = std::max(worst, max_abs_diff(restrict_total_degree(applied, n - 1),
                                                     restrict_total_degree(scaled, n - 1)));
                worst = std::max(worst,
                                 max_abs(compose(sector_projection(f, n), applied)));

                double norm2 = 0.0;
                for (const auto& z : coh.entries) norm2 += std::norm(z);
                const double phi2 = std::real(inner_product(phi, phi));
                double series = 0.0, term = 1.0;
                for (std::size_t m = 0; m <= n; ++m) {
                    if (m > 0) term *= phi2 / static_cast<double>(m);
                    series += term;
                }
                norm_dev = std::max(norm_dev, std::abs(norm2 - series));
            }
        }
    }

    // unit-norm mode at cutoff ten against the frozen partial sum
    const FockSpace f10 = fock_space(SpaceObject::base(1), 10);
    Morphism unit_mode(SpaceObject::unit(), f10.base);
    unit_mode.entries[0] = 1.0;
    const Morphism coh10 = coherent_state(f10, unit_mode);
    double norm10 = 0.0;
    for (const auto& z : coh10.entries) norm10 += std::norm(z);
    double oracle = 0.0, term = 1.0;
    for (int m = 0; m <= 10; ++m) {
        if (m > 0) term /= m;
        oracle += term;
    }
    const double frozen_dev = std::abs(norm10 - oracle);
    const bool ok = worst <= kExact && norm_dev <= kTight && frozen_dev <= 1e-9 &&
                    std::abs(norm10 - 2.7182818011) <= 1e-9;
    return {ok, std::max(worst, norm_dev),
            "law residual " + std::to_string(worst) + ", norm vs series " +
                std::to_string(norm_dev) + ", N=10 sum " + std::to_string(norm10)};
}

Outcome criterion_exponentials() {
    double worst = 0.0;
    for (std::size_t d : kDims) {
        for (std::size_t n : kCutoffs) {
            const FockSpace f = fock_space(SpaceObject::base(d), n);
            const Morphism phi = rng().state(f.base);
            const Morphism coh = coherent_state(f, phi);
            worst = std::max(worst, max_abs_diff(compose(endo_exp(raising(f, phi), n),
                                                          vacuum_state(f)),
                                                 coh));
        }
    }

    const MonoidPresentation pointwise = elementwise_monoid(2);
    for (int trial = 0; trial < kPairs; ++trial) {
        const Morphism phi = rng().state(pointwise.carrier);
        const Morphism psi = rng().state(pointwise.carrier);
        const Morphism lhs = compose(
            pointwise.mult, tensor(monoid_exp(pointwise, phi, 20), monoid_exp(pointwise, psi, 20)));
        worst = std::max(worst, max_abs_diff(lhs, monoid_exp(pointwise, add(phi, psi), 20)));

        // naturality along the coordinate projection at matched order
        const Morphism pick = dagger(basis_state(pointwise.carrier, 0));
        const MonoidPresentation scalars{
            SpaceObject::unit(),
            cast(identity(SpaceObject::unit()),
                 SpaceObject::tensor(SpaceObject::unit(), SpaceObject::unit()),
                 SpaceObject::unit()),
            scalar(1.0), true};
        worst = std::max(worst,
                         max_abs_diff(monoid_exp(scalars, compose(pick, phi), 20),
                                      compose(pick, monoid_exp(pointwise, phi, 20))));
    }
    worst = std::max(worst,
                     max_abs_diff(monoid_exp(pointwise,
                                             zero_morphism(SpaceObject::unit(),
                                                           pointwise.carrier),
                                             20),
                                  pointwise.unit));
    return {worst <= kExact, worst, ""};
}

Outcome criterion_embedding() {
    double worst = 0.0;

    // elementwise on C^2, plus one random commutative monoid conjugated from it
    std::vector<MonoidPresentation> monoids{elementwise_monoid(2)};
    {
        const MonoidPresentation base = elementwise_monoid(2);
        Morphism t(base.carrier, base.carrier);
        cplx det;
        do {
            t = rng().matrix(base.carrier, base.carrier);
            det = t.at(0, 0) * t.at(1, 1) - t.at(0, 1) * t.at(1, 0);
        } while (std::abs(det) < 0.5);
        Morphism tinv(base.carrier, base.carrier);
        tinv.at(0, 0) = t.at(1, 1) / det;
        tinv.at(0, 1) = -t.at(0, 1) / det;
        tinv.at(1, 0) = -t.at(1, 0) / det;
        tinv.at(1, 1) = t.at(0, 0) / det;
        monoids.push_back({base.carrier, compose(t, compose(base.mult, tensor(tinv, tinv))),
                           compose(t, base.unit), true});
    }

    for (const MonoidPresentation& mono : monoids) {
        const Morphism embed = monoid_embed(mono);
        const MonoidPresentation target = endo_monoid(mono.carrier);
        worst = std::max(worst, max_abs_diff(compose(target.mult, tensor(embed, embed)),
                                             compose(embed, mono.mult)));
        worst = std::max(worst, max_abs_diff(compose(embed, mono.unit),
                                             cast(target.unit, SpaceObject::unit(),
                                                  target.carrier)));
        const Morphism retraction =
            compose(tensor(identity(mono.carrier), transpose_of(mono.unit)), embed);
        worst = std::max(worst, max_abs_diff(retraction, identity(mono.carrier)));
    }
    return {worst <= kTight, worst, ""};
}

Outcome criterion_triangles() {
    double worst = 0.0;
    const std::size_t n = 3;
    for (const ComonoidPresentation& co :
         {unit_comonoid(), copy_comonoid(SpaceObject::base(2)),
          dagger_flip(elementwise_monoid(2))}) {
        const Morphism eta = eta_comonoid(co, n);
        const FockSpace fc = fock_space(co.carrier, n);
        worst = std::max(worst, max_abs_diff(compose(epsilon_single(fc), eta),
                                             identity(co.carrier)));
    }
    // outer triangle via a directly-built double Fock space at d = 1
    for (std::size_t cut = 1; cut <= 3; ++cut) {
        const FockSpace f = fock_space(SpaceObject::base(1), cut);
        const FockSpace ff = fock_space(f.object, cut);
        const Morphism eta_q = eta_comonoid(fock_comonoid(f), cut);
        const Morphism f_eps = fock_map(ff, f, epsilon_single(f));
        worst = std::max(worst, max_abs_diff(compose(f_eps, eta_q), identity(f.object)));
    }
    return {worst <= kExact, worst, ""};
}

Outcome criterion_determinism() {
    laws::SuiteConfig cfg;
    cfg.dims = {1, 2};
    cfg.cutoffs = {2, 3};
    cfg.states_per_law = 3;
    cfg.seed = 99;

    const std::string once = laws::reports_to_json(laws::run_suite(cfg)).dump();
    const std::string twice = laws::reports_to_json(laws::run_suite(cfg)).dump();
    if (once != twice) return {false, 1.0, "same-seed reports differ"};

    laws::SuiteConfig corrupt = cfg;
    corrupt.coefficients.B = [](std::size_t m, std::size_t q) {
        if (m == 1 && q == 1) return 1.0;
        return std::sqrt(static_cast<double>(binom(m + q, m)));
    };
    const auto reports = laws::run_suite(corrupt);
    bool ccr_failed = false;
    bool bialgebra_failed = false;
    for (const auto& r : reports) {
        if (r.law_id == "ccr.relations") ccr_failed = !r.passed;
        if (r.law_id == "fock.bialgebra") bialgebra_failed = !r.passed;
    }
    const bool ok = ccr_failed && bialgebra_failed;
    return {ok, ok ? 0.0 : 1.0,
            std::string("byte-stable reports; corrupted split coefficient ") +
                (ok ? "flips both target laws" : "did not flip the target laws")};
}

int run_all() {
    struct Criterion {
        const char* label;
        Outcome (*check)();
    };
    const std::vector<Criterion> criteria{
        {"commutation relations with truncation control", criterion_ccr},
        {"comonoid and bialgebra laws on the graded space", criterion_comonoid_bialgebra},
        {"additivity through the split-and-merge route", criterion_additivity},
        {"counit pair orthonormality", criterion_orthonormality},
        {"product decomposition identities", criterion_product_iso},
        {"coherent state laws and norm series", criterion_coherent},
        {"exponential laws", criterion_exponentials},
        {"endomorphism-monoid embedding", criterion_embedding},
        {"adjunction triangles", criterion_triangles},
        {"suite determinism and negative controls", criterion_determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Outcome outcome = criteria[i].check();
        std::printf("criterion %2zu: %-52s %s (worst %.3e%s%s)\n", i + 1, criteria[i].label,
                    outcome.passed ? "PASS" : "FAIL", outcome.worst,
                    outcome.note.empty() ? "" : "; ", outcome.note.c_str());
        std::fflush(stdout);
        if (!outcome.passed) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main() {
    return run_all();
}
