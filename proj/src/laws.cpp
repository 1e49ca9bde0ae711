#include "qho/laws.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>

#include "qho/algebraic.hpp"
#include "qho/errors.hpp"

namespace qho::laws {

double Rng::uniform() {
    return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
}

double Rng::gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

cplx Rng::gaussian_cplx() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
}

Morphism Rng::matrix(const SpaceObject& dom, const SpaceObject& cod) {
    Morphism m(dom, cod);
    for (auto& z : m.entries) z = gaussian_cplx();
    return m;
}

Morphism Rng::state(const SpaceObject& a) {
    Morphism v = matrix(SpaceObject::unit(), a);
    double norm2 = 0.0;
    for (const auto& z : v.entries) norm2 += std::norm(z);
    if (norm2 > 0.0) {
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& z : v.entries) z *= inv;
    }
    return v;
}

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

LawReport make_report(std::string_view id, double deviation, std::string restriction,
                      double tolerance, double elapsed) {
    return {std::string(id), deviation, std::move(restriction), deviation <= tolerance, elapsed};
}

// Four bialgebra compatibility diagrams for (F, d, e, d^dag, e^dag), checked
// on inputs of total degree <= cutoff. The main diagram is evaluated column
// by column: materialising d (x) d would need dim(F)^4 entries.
double bialgebra_residual(const FockSpace& f, const Morphism& d, const Morphism& e) {
    const std::size_t dim = f.dim();
    const std::size_t n = f.cutoff;
    const Morphism edag = dagger(e);

    // degree of each Fock index
    std::vector<std::size_t> deg(dim);
    for (std::size_t i = 0; i < dim; ++i) deg[i] = index_degree(f.object, i);

    double residual = 0.0;

    // unit/counit compatibility: e e^dag = 1
    residual = std::max(residual, std::abs(compose(e, edag).scalar_value() - 1.0));

    // comultiplication of the unit: d e^dag = e^dag (x) e^dag
    residual = std::max(residual, max_abs_diff(compose(d, edag), tensor(edag, edag)));

    // counit of the multiplication on degree <= N inputs: e d^dag = e (x) e
    {
        const Morphism lhs = compose(e, dagger(d));
        const Morphism rhs = tensor(e, e);
        for (std::size_t a = 0; a < dim; ++a) {
            for (std::size_t b = 0; b < dim; ++b) {
                if (deg[a] + deg[b] > n) continue;
                const std::size_t col = a * dim + b;
                residual = std::max(residual,
                                    std::abs(lhs.entries[col] - rhs.entries[col]));
            }
        }
    }

    // main diagram on x (x) y with deg(x)+deg(y) <= N:
    //   d . d^dag = (d^dag (x) d^dag) . (id (x) swap (x) id) . (d (x) d)
    std::vector<std::pair<std::size_t, std::size_t>> inputs;
    for (std::size_t x = 0; x < dim; ++x) {
        for (std::size_t y = 0; y < dim; ++y) {
            if (deg[x] + deg[y] <= n) inputs.emplace_back(x, y);
        }
    }

    double main_residual = 0.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(max : main_residual)
#endif
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(inputs.size()); ++idx) {
        const auto [x, y] = inputs[static_cast<std::size_t>(idx)];

        // columns of d at basis inputs, as sparse (row, value) lists
        auto column_nz = [&](std::size_t col) {
            std::vector<std::pair<std::size_t, cplx>> nz;
            for (std::size_t r = 0; r < dim * dim; ++r) {
                const cplx v = d.entries[r * dim + col];
                if (v != cplx{}) nz.emplace_back(r, v);
            }
            return nz;
        };
        const auto dx = column_nz(x);
        const auto dy = column_nz(y);

        // lhs column: d applied to (row x*dim+y of d, conjugated)
        std::vector<cplx> mid(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            mid[r] = std::conj(d.entries[(x * dim + y) * dim + r]);
        }
        std::vector<cplx> lhs(dim * dim);
        for (std::size_t r = 0; r < dim * dim; ++r) {
            cplx acc = 0.0;
            const cplx* row = d.entries.data() + r * dim;
            for (std::size_t c = 0; c < dim; ++c) acc += row[c] * mid[c];
            lhs[r] = acc;
        }

        // rhs column: sum over splits of x and y, recombined crosswise.
        // d^dag column (a,c) is row a*dim+c of d, conjugated.
        std::vector<cplx> rhs(dim * dim);
        for (const auto& [ab, xv] : dx) {
            const std::size_t a = ab / dim;
            const std::size_t b = ab % dim;
            for (const auto& [ce, yv] : dy) {
                const std::size_t c = ce / dim;
                const std::size_t e2 = ce % dim;
                const cplx w = xv * yv;
                const cplx* left = d.entries.data() + (a * dim + c) * dim;
                const cplx* right = d.entries.data() + (b * dim + e2) * dim;
                for (std::size_t r = 0; r < dim; ++r) {
                    const cplx lw = w * std::conj(left[r]);
                    if (lw == cplx{}) continue;
                    cplx* out = rhs.data() + r * dim;
                    for (std::size_t s = 0; s < dim; ++s) {
                        out[s] += lw * std::conj(right[s]);
                    }
                }
            }
        }

        double local = 0.0;
        for (std::size_t r = 0; r < dim * dim; ++r) {
            local = std::max(local, std::abs(lhs[r] - rhs[r]));
        }
        main_residual = std::max(main_residual, local);
    }

    return std::max(residual, main_residual);
}

}  // namespace

LawReport check_comonoid(const ComonoidPresentation& co, double tolerance) {
    Timer t;
    const double dev = comonoid_laws_residual(co);
    return make_report(law("comonoid.laws"), dev, "exact on the whole carrier", tolerance,
                       t.seconds());
}

LawReport check_bialgebra(const ComonoidPresentation& co, double tolerance) {
    Timer t;
    if (co.carrier.kind() != SpaceObject::Kind::Fock) {
        throw DomainMismatch("check_bialgebra: carrier must be a Fock object, got " +
                             co.carrier.describe());
    }
    const FockSpace f = fock_space(co.carrier.parts().front(), co.carrier.cutoff());
    const double dev = bialgebra_residual(f, co.comult, co.counit);
    return make_report(law("fock.bialgebra"), dev, "inputs of total degree <= N", tolerance,
                       t.seconds());
}

LawReport check_ccr(const FockSpace& f, const Morphism& phi, const Morphism& psi,
                    const LadderCoefficients& lc, double tolerance) {
    Timer t;
    const Morphism raise_phi = raising(f, phi, lc);
    const Morphism raise_psi = raising(f, psi, lc);
    const Morphism lower_phi = dagger(raise_phi);
    const Morphism lower_psi = dagger(raise_psi);

    double dev = 0.0;
    // mixed relation on sectors <= N-1 (vacuous below cutoff 1)
    if (f.cutoff >= 1) {
        const Morphism lhs = compose(lower_phi, raise_psi);
        const Morphism rhs = add(compose(raise_psi, lower_phi),
                                 scalar_mul(inner_product(phi, psi), identity(f.object)));
        const std::size_t mask = f.cutoff - 1;
        dev = std::max(dev, max_abs_diff(restrict_total_degree(lhs, mask),
                                         restrict_total_degree(rhs, mask)));
    }
    // double raising commutes (exact wherever defined; sector N input rows
    // vanish on both sides, so no mask is needed)
    dev = std::max(dev, max_abs_diff(compose(raise_phi, raise_psi),
                                     compose(raise_psi, raise_phi)));
    // double lowering commutes
    dev = std::max(dev, max_abs_diff(compose(lower_phi, lower_psi),
                                     compose(lower_psi, lower_phi)));

    return make_report(law("ccr.relations"), dev, "mixed relation on sectors <= N-1", tolerance,
                       t.seconds());
}

LawReport check_coherent(const FockSpace& f, const Morphism& phi, const LadderCoefficients& lc,
                         double tolerance) {
    Timer t;
    const Morphism coh = coherent_state(f, phi, lc);
    const Morphism d = comultiplication(f, lc);
    const Morphism e = counit_e(f, lc);

    // copy on total degree <= N
    double dev = max_abs_diff(compose(d, coh), restrict_total_degree(tensor(coh, coh), f.cutoff));
    // delete
    dev = std::max(dev, std::abs(compose(e, coh).scalar_value() - 1.0));
    // eigenstate on sectors <= N-1, and the sector-N truncation artifact
    if (f.cutoff >= 1) {
        const Morphism lower = lowering(f, phi, lc);
        const Morphism applied = compose(lower, coh);
        const Morphism scaled = scalar_mul(inner_product(phi, phi), coh);
        const std::size_t mask = f.cutoff - 1;
        dev = std::max(dev, max_abs_diff(restrict_total_degree(applied, mask),
                                         restrict_total_degree(scaled, mask)));
        dev = std::max(dev, max_abs(compose(sector_projection(f, f.cutoff), applied)));
    }
    // squared norm against the partial sums of the exponential series
    {
        double norm2 = 0.0;
        for (const auto& z : coh.entries) norm2 += std::norm(z);
        const double phi2 = std::real(inner_product(phi, phi));
        double expect = 0.0;
        double term = 1.0;
        for (std::size_t m = 0; m <= f.cutoff; ++m) {
            if (m > 0) term *= phi2 / static_cast<double>(m);
            expect += term;
        }
        dev = std::max(dev, std::abs(norm2 - expect));
    }

    return make_report(law("coherent.eigenstate"), dev,
                       "copy on degree <= N; eigenstate on sectors <= N-1", tolerance,
                       t.seconds());
}

LawReport check_adjunction(const FockSpace& f, const ComonoidPresentation& co,
                           const LadderCoefficients& lc, double tolerance) {
    Timer t;
    double dev = 0.0;

    // triangle at the comonoid stage: eps . Reta = id
    const Morphism eta = eta_comonoid(co, f.cutoff, lc);
    const FockSpace fc = fock_space(co.carrier, f.cutoff);
    dev = std::max(dev, max_abs_diff(compose(epsilon_single(fc, lc), eta),
                                     identity(co.carrier)));

    // counit from the empty product: e = Rk_0 . F(0_{A,0})
    {
        const FockSpace f0 = fock_space(SpaceObject::zero(), f.cutoff);
        const Morphism to_zero = zero_morphism(f.base, SpaceObject::zero());
        const Morphism rk0 = counit_e(f0, lc);  // F(0) -> I is one-dimensional
        dev = std::max(dev, max_abs_diff(compose(rk0, fock_map(f, f0, to_zero)),
                                         counit_e(f, lc)));
    }

    // comultiplication from the diagonal: d = k_{A,A} . F(diag)
    {
        const std::vector<SpaceObject> parts{f.base, f.base};
        const Morphism diag = add(injection(parts, 0), injection(parts, 1));
        const FockSpace fsum = fock_space(SpaceObject::biproduct(parts), f.cutoff);
        const Morphism k = k_decompose(f.base, f.base, f.cutoff, lc);
        dev = std::max(dev, max_abs_diff(compose(k, fock_map(f, fsum, diag)),
                                         comultiplication(f, lc)));
    }

    return make_report(law("adjunction.structure-formulas"), dev, "exact on all sectors <= N",
                       tolerance, t.seconds());
}

LawReport check_exponentials(const FockSpace& f, const Morphism& phi,
                             const LadderCoefficients& lc, double tolerance) {
    Timer t;
    double dev = 0.0;

    const Morphism coh = coherent_state(f, phi, lc);
    const MonoidPresentation fock_monoid = dagger_flip(fock_comonoid(f, lc));

    // raising-series: exp(a^dag_phi) applied to the vacuum gives Coh(phi)
    {
        const Morphism series = endo_exp(raising(f, phi, lc), f.cutoff);
        dev = std::max(dev, max_abs_diff(compose(series, vacuum_state(f, lc)), coh));
    }
    // coherent state as a monoid exponential of the embedded single particle
    {
        const Morphism embedded = compose(dagger(epsilon_single(f, lc)), phi);
        dev = std::max(dev, max_abs_diff(monoid_exp(fock_monoid, embedded, f.cutoff), coh));
    }
    // exponential of zero is the unit (the vacuum)
    {
        const Morphism z = zero_morphism(SpaceObject::unit(), f.object);
        dev = std::max(dev, max_abs_diff(monoid_exp(fock_monoid, z, f.cutoff),
                                         vacuum_state(f, lc)));
    }

    return make_report(law("exp.raising-series"), dev, "exact on all sectors <= N", tolerance,
                       t.seconds());
}

nlohmann::json reports_to_json(const std::vector<LawReport>& reports) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : reports) {
        out.push_back(nlohmann::json{{"law_id", r.law_id},
                                     {"max_abs_deviation", r.max_abs_deviation},
                                     {"sector_restriction", r.sector_restriction},
                                     {"passed", r.passed}});
    }
    return out;
}

bool all_passed(const std::vector<LawReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const LawReport& r) { return r.passed; });
}

namespace {

// Accumulates residuals per law over the whole grid.
class Collector {
public:
    explicit Collector(double tolerance) : tolerance_(tolerance) {}

    void record(std::string_view id, double deviation, std::string_view restriction,
                double elapsed = 0.0) {
        auto& report = reports_[std::string(id)];
        if (report.law_id.empty()) {
            report.law_id = std::string(id);
            report.sector_restriction = std::string(restriction);
        }
        report.max_abs_deviation = std::max(report.max_abs_deviation, deviation);
        report.passed = report.max_abs_deviation <= tolerance_;
        report.elapsed_seconds += elapsed;
    }

    void merge(const LawReport& r) {
        record(r.law_id, r.max_abs_deviation, r.sector_restriction, r.elapsed_seconds);
    }

    std::vector<LawReport> finish() const {
        for (std::string_view id : manifest) {
            if (!reports_.contains(std::string(id))) {
                throw Error("law suite did not exercise '" + std::string(id) + "'");
            }
        }
        std::vector<LawReport> out;
        out.reserve(reports_.size());
        for (const auto& [id, report] : reports_) out.push_back(report);  // map: sorted by id
        return out;
    }

private:
    double tolerance_;
    std::map<std::string, LawReport> reports_;
};

double norm_inf(const Morphism& m) {
    return max_abs(m);
}

// ---- core category laws ---------------------------------------------------

void core_laws(Collector& col, Rng& rng, std::size_t trials) {
    Timer t;
    const SpaceObject c2 = SpaceObject::base(2);
    const SpaceObject c3 = SpaceObject::base(3);

    // canonical projections/injections of a three-part biproduct
    {
        const std::vector<SpaceObject> parts{c2, c3, SpaceObject::base(1)};
        const SpaceObject whole = SpaceObject::biproduct(parts);
        double dev = 0.0;
        Morphism sum = zero_morphism(whole, whole);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const Morphism inj = injection(parts, i);
            const Morphism proj = projection(parts, i);
            dev = std::max(dev, max_abs_diff(proj, dagger(inj)));
            for (std::size_t j = 0; j < parts.size(); ++j) {
                const Morphism mixed = compose(projection(parts, j), inj);
                if (i == j) {
                    dev = std::max(dev, max_abs_diff(mixed, identity(parts[i])));
                } else {
                    dev = std::max(dev, norm_inf(mixed));
                }
            }
            sum = add(sum, compose(inj, proj));
        }
        dev = std::max(dev, max_abs_diff(sum, identity(whole)));
        col.record(law("biproduct.projections"), dev, "exact", t.seconds());
    }

    for (std::size_t trial = 0; trial < trials; ++trial) {
        // composition is linear on both sides
        {
            Timer tt;
            const Morphism f = rng.matrix(c2, c3);
            const Morphism f2 = rng.matrix(c2, c3);
            const Morphism g = rng.matrix(c3, c2);
            double dev = max_abs_diff(compose(g, add(f, f2)),
                                      add(compose(g, f), compose(g, f2)));
            const Morphism h = rng.matrix(c3, c2);
            dev = std::max(dev, max_abs_diff(compose(add(g, h), f),
                                             add(compose(g, f), compose(h, f))));
            col.record(law("compose.linearity"), dev, "exact", tt.seconds());
        }
        // scalar action is a semimodule compatible with composition
        {
            Timer tt;
            const cplx s = rng.gaussian_cplx();
            const cplx p = rng.gaussian_cplx();
            const Morphism f = rng.matrix(c2, c3);
            const Morphism g = rng.matrix(c3, c2);
            double dev = max_abs_diff(scalar_mul(s * p, f), scalar_mul(s, scalar_mul(p, f)));
            dev = std::max(dev, max_abs_diff(compose(g, scalar_mul(s, f)),
                                             scalar_mul(s, compose(g, f))));
            dev = std::max(dev, max_abs_diff(compose(scalar_mul(s, g), f),
                                             scalar_mul(s, compose(g, f))));
            // scalars commute
            dev = std::max(dev,
                           max_abs_diff(compose(scalar(s), scalar(p)), compose(scalar(p), scalar(s))));
            col.record(law("scalar.compatibility"), dev, "exact", tt.seconds());
        }
        // symmetry: involution and naturality
        {
            Timer tt;
            const Morphism f = rng.matrix(c2, c2);
            const Morphism g = rng.matrix(c3, c3);
            const Morphism sw = swap_morphism(c2, c3);
            const Morphism sw_back = swap_morphism(c3, c2);
            double dev = max_abs_diff(compose(sw_back, sw), identity(SpaceObject::tensor(c2, c3)));
            dev = std::max(dev, max_abs_diff(compose(sw, tensor(f, g)),
                                             compose(tensor(g, f), sw)));
            col.record(law("swap.symmetric"), dev, "exact", tt.seconds());
        }
        // interchange of tensor and composition
        {
            Timer tt;
            const Morphism f1 = rng.matrix(c2, c2);
            const Morphism f2 = rng.matrix(c2, c2);
            const Morphism g1 = rng.matrix(c2, c2);
            const Morphism g2 = rng.matrix(c2, c2);
            const double dev = max_abs_diff(compose(tensor(f1, g1), tensor(f2, g2)),
                                            tensor(compose(f1, f2), compose(g1, g2)));
            col.record(law("tensor.interchange"), dev, "exact", tt.seconds());
        }
    }

    // compact structure: snakes, basis pairing, names, transpose involution
    for (std::size_t d = 1; d <= 6; ++d) {
        Timer tt;
        const SpaceObject a = SpaceObject::base(d);
        const auto [zeta, theta] = duality_pair(a);
        const SpaceObject astar = SpaceObject::dual(a);
        const Morphism ida = identity(a);
        const Morphism idstar = identity(astar);

        double dev = max_abs_diff(compose(tensor(ida, theta), tensor(zeta, ida)), ida);
        dev = std::max(dev, max_abs_diff(compose(tensor(theta, idstar), tensor(idstar, zeta)),
                                         idstar));
        // theta . (v_n* (x) v_m) = delta_{nm}
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                const cplx got =
                    compose(theta, tensor(basis_state(astar, i), basis_state(a, j)))
                        .scalar_value();
                dev = std::max(dev, std::abs(got - (i == j ? cplx{1.0} : cplx{0.0})));
            }
        }
        // trace of the identity: theta . swap . zeta = dim
        const cplx tr =
            compose(theta, compose(swap_morphism(a, astar), zeta)).scalar_value();
        dev = std::max(dev, std::abs(tr - cplx{static_cast<double>(d)}));
        // composing names: (id (x) theta (x) id) . (name k (x) name h) = name(k . h)
        {
            const Morphism h = rng.matrix(a, a);
            const Morphism k = rng.matrix(a, a);
            const Morphism contract = tensor(tensor(ida, theta), idstar);
            const Morphism lhs = compose(contract, tensor(name_of(k), name_of(h)));
            dev = std::max(dev, max_abs_diff(lhs, name_of(compose(k, h))));
            dev = std::max(dev, max_abs_diff(transpose_of(transpose_of(h)), h));
            dev = std::max(dev, max_abs_diff(name_of(ida), zeta));
        }
        col.record(law("dual.structure"), dev, "dims 1..6", tt.seconds());
    }
}

// ---- symmetric power laws ---------------------------------------------------

void symmetric_laws(Collector& col, Rng& rng) {
    for (std::size_t d = 1; d <= 3; ++d) {
        const SpaceObject a = SpaceObject::base(d);
        for (std::size_t n = 0; n <= 4; ++n) {
            Timer t;
            const Morphism s = sym_isometry(a, n);
            const Morphism sdag = sym_isometry_dag(a, n);

            double dev = max_abs_diff(compose(s, sdag), identity(symmetric_space(a, n).object));
            col.record(law("sym.coisometry"), dev, "exact", t.seconds());

            // full-group average, naturality, commutation with permutations
            Timer t2;
            const Morphism projector = compose(sdag, s);
            Morphism average = zero_morphism(projector.dom, projector.cod);
            std::vector<std::size_t> perm(n);
            for (std::size_t i = 0; i < n; ++i) perm[i] = i;
            std::size_t count = 0;
            do {
                average = add(average, permutation_unitary(a, perm));
                ++count;
            } while (std::next_permutation(perm.begin(), perm.end()));
            average = scalar_mul(1.0 / static_cast<double>(count), average);
            double dev2 = max_abs_diff(projector, average);

            const Morphism f = rng.matrix(a, a);
            const Morphism fn = tensor_power(f, n);
            dev2 = std::max(dev2, max_abs_diff(compose(fn, projector), compose(projector, fn)));
            for (std::size_t i = 0; i + 1 < n; ++i) {
                std::vector<std::size_t> tau(n);
                for (std::size_t j = 0; j < n; ++j) tau[j] = j;
                std::swap(tau[i], tau[i + 1]);
                const Morphism u = permutation_unitary(a, tau);
                dev2 = std::max(dev2, max_abs_diff(compose(u, projector),
                                                   compose(projector, u)));
            }
            col.record(law("sym.projector-natural"), dev2, "d <= 3, n <= 4", t2.seconds());

            // functor laws for S_n
            Timer t3;
            const Morphism g = rng.matrix(a, a);
            double dev3 = max_abs_diff(sym_power(identity(a), n),
                                       identity(symmetric_space(a, n).object));
            dev3 = std::max(dev3, max_abs_diff(sym_power(compose(g, f), n),
                                               compose(sym_power(g, n), sym_power(f, n))));
            col.record(law("sym.functor"), dev3, "d <= 3, n <= 4", t3.seconds());
        }
    }
}

// ---- grid-parameterised Fock laws -------------------------------------------

void fock_laws(Collector& col, Rng& rng, const SuiteConfig& cfg, std::size_t d, std::size_t n) {
    const LadderCoefficients& lc = cfg.coefficients;
    const SpaceObject a = SpaceObject::base(d);
    const FockSpace f = fock_space(a, n);
    const Morphism comult = comultiplication(f, lc);
    const Morphism e = counit_e(f, lc);
    const Morphism eps = epsilon_single(f, lc);
    const Morphism idf = identity(f.object);

    // functoriality and dagger compatibility of F
    {
        Timer t;
        const Morphism p = rng.matrix(a, a);
        const Morphism q = rng.matrix(a, a);
        double dev = max_abs_diff(fock_map(f, f, identity(a)), idf);
        dev = std::max(dev, max_abs_diff(fock_map(f, f, compose(q, p)),
                                         compose(fock_map(f, f, q), fock_map(f, f, p))));
        dev = std::max(dev, max_abs_diff(fock_map(f, f, dagger(p)), dagger(fock_map(f, f, p))));
        col.record(law("fock.functor"), dev, "exact at every cutoff", t.seconds());
    }

    col.merge(check_comonoid(fock_comonoid(f, lc), cfg.tolerance));
    col.merge(check_bialgebra(fock_comonoid(f, lc), cfg.tolerance));

    // additivity: F(p + q) = d^dag (F(p) (x) F(q)) d
    {
        Timer t;
        double dev = 0.0;
        for (std::size_t trial = 0; trial < cfg.states_per_law; ++trial) {
            const Morphism p = rng.matrix(a, a);
            const Morphism q = rng.matrix(a, a);
            const Morphism rhs =
                compose(dagger(comult),
                        compose(tensor(fock_map(f, f, p), fock_map(f, f, q)), comult));
            dev = std::max(dev, max_abs_diff(fock_map(f, f, add(p, q)), rhs));
        }
        col.record(law("fock.additivity"), dev, "exact on all sectors <= N", t.seconds());
    }

    // orthonormality of the counit pair
    {
        Timer t;
        double dev = max_abs_diff(compose(eps, dagger(eps)), identity(a));
        dev = std::max(dev, std::abs(compose(e, dagger(e)).scalar_value() - 1.0));
        dev = std::max(dev, norm_inf(compose(e, dagger(eps))));
        col.record(law("fock.orthonormal"), dev, "exact", t.seconds());
    }

    // eps . d^dag = eps (x) e + e (x) eps
    {
        Timer t;
        const Morphism lhs = compose(eps, dagger(comult));
        const Morphism rhs = add(tensor(eps, e), tensor(e, eps));
        col.record(law("fock.counit-expansion"), max_abs_diff(lhs, rhs),
                   "inputs of total degree <= N", t.seconds());
    }

    // explicit raising sum agrees with the natural-transformation route
    {
        Timer t;
        const Morphism a_stage = lowering_stage(f, lc);  // F -> F (x) A
        double dev = 0.0;
        for (std::size_t trial = 0; trial < cfg.states_per_law; ++trial) {
            const Morphism phi = rng.state(a);
            const Morphism via_stage = compose(dagger(a_stage), tensor(idf, phi));
            dev = std::max(dev, max_abs_diff(raising(f, phi, lc), via_stage));
        }
        col.record(law("fock.raising-definition"), dev, "exact at every cutoff", t.seconds());
    }

    for (std::size_t trial = 0; trial < cfg.states_per_law; ++trial) {
        const Morphism phi = rng.state(a);
        const Morphism psi = rng.state(a);
        col.merge(check_ccr(f, phi, psi, lc, cfg.tolerance));
        col.merge(check_coherent(f, phi, lc, cfg.tolerance));

        // coherent state built from its definition: F(phi) . Reta at the unit
        {
            Timer t;
            const FockSpace fi = fock_space(SpaceObject::unit(), n);
            const Morphism eta_i = eta_comonoid(unit_comonoid(), n, lc);
            const Morphism by_definition = compose(fock_map(fi, f, phi), eta_i);
            col.record(law("coherent.definition"),
                       max_abs_diff(by_definition, coherent_state(f, phi, lc)),
                       "exact on all sectors <= N", t.seconds());
        }
        // copy/delete separated from the eigenstate theorem
        {
            Timer t;
            const Morphism coh = coherent_state(f, phi, lc);
            double dev = max_abs_diff(compose(comult, coh),
                                      restrict_total_degree(tensor(coh, coh), n));
            dev = std::max(dev, std::abs(compose(e, coh).scalar_value() - 1.0));
            col.record(law("coherent.copy-delete"), dev, "copy on total degree <= N",
                       t.seconds());
        }
    }

    // norm identity: partial sums of e^{|phi|^2}, monotone in the cutoff
    {
        Timer t;
        const Morphism phi = rng.state(a);
        double dev = 0.0;
        double previous = 0.0;
        for (std::size_t cut = 0; cut <= n; ++cut) {
            const FockSpace fc = fock_space(a, cut);
            const Morphism coh = coherent_state(fc, phi, lc);
            double norm2 = 0.0;
            for (const auto& z : coh.entries) norm2 += std::norm(z);
            double expect = 0.0;
            double term = 1.0;
            for (std::size_t m = 0; m <= cut; ++m) {
                if (m > 0) term /= static_cast<double>(m);  // |phi| = 1
                expect += term;
            }
            dev = std::max(dev, std::abs(norm2 - expect));
            if (norm2 + cfg.tolerance < previous) dev = std::max(dev, previous - norm2);
            previous = norm2;
        }
        col.record(law("coherent.norm"), dev, "partial sums, monotone in N", t.seconds());
    }

    col.merge(check_adjunction(f, copy_comonoid(a), lc, cfg.tolerance));

    // product preservation: restricted unitarity and the projection diagrams
    {
        Timer t;
        const SpaceObject b = SpaceObject::base(std::max<std::size_t>(1, d - 1));
        const std::vector<SpaceObject> parts{a, b};
        const SpaceObject ab = SpaceObject::biproduct(parts);
        const FockSpace fa = f;
        const FockSpace fb = fock_space(b, n);
        const FockSpace fab = fock_space(ab, n);
        const Morphism k = k_decompose(a, b, n, lc);

        // unitary after restriction: identity on F(A(+)B), degree projector back
        double dev = max_abs_diff(compose(dagger(k), k), identity(fab.object));
        const Morphism back = compose(k, dagger(k));
        dev = std::max(dev, max_abs_diff(back, total_degree_mask(back.dom, n)));
        const Morphism fpa = fock_map(fab, fa, projection(parts, 0));
        const Morphism fpb = fock_map(fab, fb, projection(parts, 1));
        dev = std::max(dev, max_abs_diff(
                                compose(tensor(identity(fa.object), counit_e(fb, lc)), k), fpa));
        dev = std::max(dev, max_abs_diff(
                                compose(tensor(counit_e(fa, lc), identity(fb.object)), k), fpb));
        col.record(law("adjunction.product-preservation"), dev,
                   "unitarity restricted to total degree <= N", t.seconds());
    }
}

// ---- fixed-size laws (their restrictions pin the instance sizes) ------------

void fixed_size_laws(Collector& col, Rng& rng, const SuiteConfig& cfg) {
    const LadderCoefficients& lc = cfg.coefficients;

    // triangles at three comonoids, plus eta as a morphism of comonoids
    {
        Timer t;
        const std::size_t n = 4;
        double dev = 0.0;
        double dev_eta = 0.0;
        const std::vector<ComonoidPresentation> comonoids{
            unit_comonoid(), copy_comonoid(SpaceObject::base(2)),
            dagger_flip(elementwise_monoid(2))};
        for (const ComonoidPresentation& co : comonoids) {
            const Morphism eta = eta_comonoid(co, n, lc);
            const FockSpace fc = fock_space(co.carrier, n);
            dev = std::max(dev, max_abs_diff(compose(epsilon_single(fc, lc), eta),
                                             identity(co.carrier)));
            const Morphism lhs = compose(comultiplication(fc, lc), eta);
            const Morphism rhs = compose(tensor(eta, eta), co.comult);
            dev_eta = std::max(dev_eta, max_abs_diff(lhs, restrict_total_degree(rhs, n)));
        }
        col.record(law("adjunction.triangle-r"), dev, "exact for every lawful comonoid",
                   t.seconds());
        col.record(law("adjunction.eta-comonoid"), dev_eta, "outputs of total degree <= N",
                   t.seconds());

        // unit-comonoid components are the series coefficients
        const Morphism eta_i = eta_comonoid(unit_comonoid(), n, lc);
        double dev_k = 0.0;
        for (std::size_t m = 0; m <= n; ++m) {
            dev_k = std::max(dev_k, std::abs(eta_i.entries[m] - cplx{lc.K(m)}));
        }
        col.record(law("adjunction.eta-comonoid"), dev_k, "outputs of total degree <= N");
    }

    // outer triangle at d = 1, N <= 3, against a directly built F(F(A))
    {
        Timer t;
        double dev = 0.0;
        for (std::size_t n = 1; n <= 3; ++n) {
            const SpaceObject a = SpaceObject::base(1);
            const FockSpace f = fock_space(a, n);
            const FockSpace ff = fock_space(f.object, n);
            const Morphism eta_q = eta_comonoid(fock_comonoid(f, lc), n, lc);
            const Morphism f_eps = fock_map(ff, f, epsilon_single(f, lc));
            dev = std::max(dev, max_abs_diff(compose(f_eps, eta_q), identity(f.object)));
        }
        col.record(law("adjunction.triangle-q"), dev, "d = 1, N <= 3, outer cutoff = N",
                   t.seconds());
    }

    // product preservation via the adjunction hom-set isomorphism
    {
        Timer t;
        double dev = 0.0;
        for (std::size_t n = 2; n <= 3; ++n) {
            const SpaceObject a = SpaceObject::base(1);
            const SpaceObject b = SpaceObject::base(1);
            const std::vector<SpaceObject> parts{a, b};
            const FockSpace fa = fock_space(a, n);
            const FockSpace fb = fock_space(b, n);
            const FockSpace fab = fock_space(SpaceObject::biproduct(parts), n);

            // product comonoid Q(A) x Q(B) on F(A) (x) F(B)
            const Morphism da = comultiplication(fa, lc);
            const Morphism db = comultiplication(fb, lc);
            const SpaceObject carrier = SpaceObject::tensor(fa.object, fb.object);
            const Morphism mid = tensor(tensor(identity(fa.object),
                                               swap_morphism(fa.object, fb.object)),
                                        identity(fb.object));
            const ComonoidPresentation product{
                carrier,
                cast(compose(mid, tensor(da, db)), carrier,
                     SpaceObject::tensor(carrier, carrier)),
                cast(tensor(counit_e(fa, lc), counit_e(fb, lc)), carrier,
                     SpaceObject::unit())};

            // r = i_A eps_A (x) e_B + e_A (x) i_B eps_B
            const Morphism r =
                add(tensor(compose(injection(parts, 0), epsilon_single(fa, lc)),
                           counit_e(fb, lc)),
                    tensor(counit_e(fa, lc),
                           compose(injection(parts, 1), epsilon_single(fb, lc))));

            const FockSpace f_carrier = fock_space(carrier, n);
            const Morphism eta_prod = eta_comonoid(product, n, lc);
            const Morphism via_hom =
                compose(fock_map(f_carrier, fab, cast(r, carrier, fab.base)), eta_prod);
            const Morphism k = k_decompose(a, b, n, lc);
            dev = std::max(dev, max_abs_diff(via_hom, dagger(k)));
        }
        col.record(law("adjunction.product-preservation"), dev,
                   "unitarity restricted to total degree <= N", t.seconds());
    }

    // exponentials over commutative monoids
    {
        Timer t;
        const MonoidPresentation pointwise = elementwise_monoid(2);
        const std::size_t order = 20;
        double dev_add = 0.0;
        double dev_nat = 0.0;
        for (std::size_t trial = 0; trial < cfg.states_per_law; ++trial) {
            const Morphism phi = rng.state(pointwise.carrier);
            const Morphism psi = rng.state(pointwise.carrier);
            const Morphism both = compose(pointwise.mult,
                                          tensor(monoid_exp(pointwise, phi, order),
                                                 monoid_exp(pointwise, psi, order)));
            dev_add = std::max(dev_add,
                               max_abs_diff(both, monoid_exp(pointwise, add(phi, psi), order)));

            // coordinate projections and the coordinate swap are monoid maps
            const Morphism pick = dagger(basis_state(pointwise.carrier, 0));
            const MonoidPresentation scalar_monoid{
                SpaceObject::unit(),
                cast(identity(SpaceObject::unit()),
                     SpaceObject::tensor(SpaceObject::unit(), SpaceObject::unit()),
                     SpaceObject::unit()),
                scalar(1.0), true};
            dev_nat = std::max(dev_nat,
                               max_abs_diff(monoid_exp(scalar_monoid, compose(pick, phi), order),
                                            compose(pick, monoid_exp(pointwise, phi, order))));
            const Morphism exchange =
                add(compose(basis_state(pointwise.carrier, 1),
                            dagger(basis_state(pointwise.carrier, 0))),
                    compose(basis_state(pointwise.carrier, 0),
                            dagger(basis_state(pointwise.carrier, 1))));
            dev_nat = std::max(
                dev_nat, max_abs_diff(monoid_exp(pointwise, compose(exchange, phi), order),
                                      compose(exchange, monoid_exp(pointwise, phi, order))));
        }
        col.record(law("exp.additive"), dev_add, "order 20, |phi|,|psi| <= 1", t.seconds());
        col.record(law("exp.naturality"), dev_nat, "matched truncation order", t.seconds());

        // exp(0) = unit
        Timer t2;
        const Morphism z = zero_morphism(SpaceObject::unit(), pointwise.carrier);
        col.record(law("exp.zero"),
                   max_abs_diff(monoid_exp(pointwise, z, order), pointwise.unit), "exact",
                   t2.seconds());

        // definitional route through the ladder unit at the trivial comonoid
        Timer t3;
        double dev_def = 0.0;
        const std::size_t n = 4;
        const Morphism phi = rng.state(pointwise.carrier);
        const FockSpace fi = fock_space(SpaceObject::unit(), n);
        const FockSpace fc = fock_space(pointwise.carrier, n);
        const Morphism eta_plus = dagger(eta_comonoid(dagger_flip(pointwise), n, lc));
        const Morphism route = compose(eta_plus, compose(fock_map(fi, fc, phi),
                                                          eta_comonoid(unit_comonoid(), n, lc)));
        dev_def = max_abs_diff(route, monoid_exp(pointwise, phi, n));
        col.record(law("exp.definition"), dev_def, "matched truncation order", t3.seconds());
    }

    // endomorphism monoid: names multiply by composition, embeddings preserve
    // structure and retract
    {
        Timer t;
        const SpaceObject a = SpaceObject::base(2);
        const MonoidPresentation names = endo_monoid(a);
        const Morphism p = rng.matrix(a, a);
        const Morphism q = rng.matrix(a, a);
        double dev = max_abs_diff(compose(names.mult, tensor(name_of(q), name_of(p))),
                                  name_of(compose(q, p)));
        dev = std::max(dev, max_abs_diff(names.unit, name_of(identity(a))));
        dev = std::max(dev, monoid_laws_residual(names));

        for (const MonoidPresentation& mono :
             {elementwise_monoid(2),
              dagger_flip(fock_comonoid(fock_space(SpaceObject::base(1), 3), lc))}) {
            const Morphism embed = monoid_embed(mono);
            const MonoidPresentation target = endo_monoid(mono.carrier);
            // multiplication preservation
            dev = std::max(dev,
                           max_abs_diff(compose(target.mult, tensor(embed, embed)),
                                        compose(embed, mono.mult)));
            // unit preservation
            dev = std::max(dev, max_abs_diff(compose(embed, mono.unit),
                                             cast(target.unit, SpaceObject::unit(),
                                                  target.carrier)));
            // retraction witnessing monicity
            const Morphism retraction =
                compose(tensor(identity(mono.carrier), transpose_of(mono.unit)), embed);
            dev = std::max(dev, max_abs_diff(retraction, identity(mono.carrier)));
        }
        col.record(law("exp.embedding"), dev, "exact", t.seconds());
    }

    // coherent state as exponential, raising series, exp laws on the Fock side
    {
        Timer t;
        double dev = 0.0;
        for (std::size_t d = 1; d <= 2; ++d) {
            const SpaceObject a = SpaceObject::base(d);
            const FockSpace f = fock_space(a, 4);
            const Morphism phi = rng.state(a);
            const Morphism coh = coherent_state(f, phi, lc);
            const MonoidPresentation fm = dagger_flip(fock_comonoid(f, lc));
            const Morphism embedded = compose(dagger(epsilon_single(f, lc)), phi);
            dev = std::max(dev, max_abs_diff(monoid_exp(fm, embedded, 4), coh));
            col.merge(check_exponentials(f, phi, lc, cfg.tolerance));
        }
        col.record(law("exp.coherent-state"), dev, "exact on all sectors <= N", t.seconds());
    }

    // ladder coefficient constraints
    {
        Timer t;
        double dev = std::abs(std::abs(lc.C) - 1.0);
        dev = std::max(dev, std::abs(std::abs(lc.L) - 1.0));
        dev = std::max(dev, std::abs(lc.K(0) - lc.C));
        dev = std::max(dev, std::abs(lc.K(1) - lc.L));
        for (std::size_t m = 0; m <= 6; ++m) {
            for (std::size_t q = 0; q <= 6; ++q) {
                const double expect = static_cast<double>(binom(m + q, m));
                dev = std::max(dev, std::abs(lc.B(m, q) * lc.B(m, q) - expect));
            }
        }
        col.record(law("ladder.product-coefficients"), dev, "m, n <= 6", t.seconds());

        Timer t2;
        double dev_k = 0.0;
        for (std::size_t m = 0; m <= 8; ++m) {
            dev_k = std::max(dev_k, std::abs(lc.K(m) * lc.K(m) - 1.0 / factorial(m)));
            dev_k = std::max(dev_k, std::abs(static_cast<double>(m + 1) * lc.K(m + 1) *
                                                 lc.K(m + 1) -
                                             lc.K(m) * lc.K(m)));
        }
        col.record(law("ladder.unit-coefficients"), dev_k, "n <= 8", t2.seconds());
    }
}

}  // namespace

std::vector<LawReport> run_suite(const SuiteConfig& config) {
    Collector col(config.tolerance);
    Rng rng(config.seed);

    core_laws(col, rng, config.states_per_law);
    symmetric_laws(col, rng);
    for (std::size_t d : config.dims) {
        for (std::size_t n : config.cutoffs) {
            fock_laws(col, rng, config, d, n);
        }
    }
    fixed_size_laws(col, rng, config);

    return col.finish();
}

}  // namespace qho::laws
