#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "qho/symtensor.hpp"

using namespace qho;

namespace {

Morphism rand_morphism(const SpaceObject& dom, const SpaceObject& cod, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Morphism m(dom, cod);
    for (auto& z : m.entries) z = {dist(gen), dist(gen)};
    return m;
}

// independent enumeration of non-decreasing tuples by filtering all tuples
std::vector<std::vector<std::size_t>> oracle_multisets(std::size_t d, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= d;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::size_t> tuple(n);
        std::size_t rest = code;
        for (std::size_t i = n; i-- > 0;) {
            tuple[i] = rest % d;
            rest /= d;
        }
        if (std::is_sorted(tuple.begin(), tuple.end())) out.push_back(tuple);
    }
    return out;  // lexicographic because codes enumerate in that order
}

}  // namespace

TEST_CASE("multiset bases enumerate combinations with repetition") {
    const MultisetBasis b23 = multiset_basis(2, 3);
    const std::vector<std::vector<std::size_t>> expect{
        {0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}};
    CHECK(b23.elements == expect);

    CHECK(multiset_basis(4, 0).elements == std::vector<std::vector<std::size_t>>{{}});
    CHECK(multiset_basis(1, 5).elements ==
          std::vector<std::vector<std::size_t>>{{0, 0, 0, 0, 0}});
    CHECK(multiset_basis(0, 3).elements.empty());

    for (std::size_t d = 1; d <= 4; ++d) {
        for (std::size_t n = 0; n <= 4; ++n) {
            CHECK(multiset_basis(d, n).elements == oracle_multisets(d, n));
        }
    }
}

TEST_CASE("symmetric power dimension matches the stars-and-bars count") {
    for (std::size_t d = 1; d <= 5; ++d) {
        for (std::size_t n = 0; n <= 6; ++n) {
            const std::size_t counted = multiset_basis(d, n).elements.size();
            CHECK(counted == binom(d + n - 1, n));
            CHECK(symmetric_space(SpaceObject::base(d), n).object.dim() == counted);
        }
    }
    // degree zero is the unit, degree one the space itself
    CHECK(symmetric_space(SpaceObject::base(3), 0).object == SpaceObject::unit());
    CHECK(symmetric_space(SpaceObject::base(3), 1).object == SpaceObject::base(3));
}

TEST_CASE("permutation unitaries represent the group action") {
    const auto a = SpaceObject::base(2);
    CHECK(max_abs_diff(permutation_unitary(a, {0, 1, 2}),
                       identity(tensor_power_space(a, 3))) == 0.0);
    // adjacent transposition equals the swap
    CHECK(max_abs_diff(permutation_unitary(a, {1, 0}), swap_morphism(a, a)) == 0.0);

    // composition of unitaries is the unitary of the composed permutation
    std::mt19937_64 gen(5);
    std::vector<std::size_t> sigma{0, 1, 2, 3}, tau{0, 1, 2, 3};
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(sigma.begin(), sigma.end(), gen);
        std::shuffle(tau.begin(), tau.end(), gen);
        std::vector<std::size_t> composed(4);
        for (std::size_t i = 0; i < 4; ++i) composed[i] = sigma[tau[i]];
        CHECK(max_abs_diff(compose(permutation_unitary(a, sigma), permutation_unitary(a, tau)),
                           permutation_unitary(a, composed)) == 0.0);
    }
}

TEST_CASE("the symmetric inclusion is an isometry with exact coisometry") {
    for (std::size_t d = 1; d <= 3; ++d) {
        const auto a = SpaceObject::base(d);
        for (std::size_t n = 0; n <= 4; ++n) {
            const Morphism s = sym_isometry(a, n);
            const Morphism sdag = sym_isometry_dag(a, n);
            CHECK(max_abs_diff(compose(s, sdag),
                               identity(symmetric_space(a, n).object)) <= 1e-14);
        }
    }
    // degree one: the inclusion is the identity
    CHECK(max_abs_diff(sym_isometry(SpaceObject::base(3), 1), identity(SpaceObject::base(3))) ==
          0.0);
}

TEST_CASE("explicit column: the (0,1) multiset spreads over two arrangements") {
    const auto a = SpaceObject::base(2);
    const Morphism sdag = sym_isometry_dag(a, 2);
    // basis order (0,0), (0,1), (1,1); arrangements of (0,1) are rows 1 and 2
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(sdag.at(0, 1) == cplx{0});
    CHECK(std::abs(sdag.at(1, 1) - cplx{inv_sqrt2}) <= 1e-15);
    CHECK(std::abs(sdag.at(2, 1) - cplx{inv_sqrt2}) <= 1e-15);
    CHECK(sdag.at(3, 1) == cplx{0});
    CHECK(sdag.at(0, 0) == cplx{1});
    CHECK(sdag.at(3, 2) == cplx{1});
}

TEST_CASE("symmetrizer equals the average over all permutations") {
    for (std::size_t d = 1; d <= 3; ++d) {
        const auto a = SpaceObject::base(d);
        for (std::size_t n = 1; n <= 4; ++n) {
            const Morphism p = symmetrizer(a, n);

            std::vector<std::size_t> perm(n);
            for (std::size_t i = 0; i < n; ++i) perm[i] = i;
            Morphism average = zero_morphism(p.dom, p.cod);
            std::size_t count = 0;
            do {
                average = add(average, permutation_unitary(a, perm));
                ++count;
            } while (std::next_permutation(perm.begin(), perm.end()));
            average = scalar_mul(1.0 / static_cast<double>(count), average);

            CHECK(max_abs_diff(p, average) <= 1e-13);
            CHECK(max_abs_diff(compose(p, p), p) <= 1e-12);  // idempotent

            // natural against tensor powers
            const Morphism f = rand_morphism(a, a, 31 * d + n);
            const Morphism fn = tensor_power(f, n);
            CHECK(max_abs_diff(compose(fn, p), compose(p, fn)) <= 1e-12);
        }
    }
}

TEST_CASE("symmetric powers act functorially") {
    const auto a = SpaceObject::base(2);
    for (std::size_t n = 0; n <= 3; ++n) {
        CHECK(max_abs_diff(sym_power(identity(a), n),
                           identity(symmetric_space(a, n).object)) <= 1e-14);
        const Morphism f = rand_morphism(a, a, 61 + n);
        const Morphism g = rand_morphism(a, a, 71 + n);
        CHECK(max_abs_diff(sym_power(compose(g, f), n),
                           compose(sym_power(g, n), sym_power(f, n))) <= 1e-12);
    }
}

TEST_CASE("second symmetric power of a diagonal map in the multiset basis") {
    // diag(a, b) has S_2 = diag(a^2, ab, b^2) against the conjugation oracle
    const auto a = SpaceObject::base(2);
    const cplx va{1.5, -0.5};
    const cplx vb{-2.0, 1.0};
    Morphism diag(a, a);
    diag.at(0, 0) = va;
    diag.at(1, 1) = vb;

    const Morphism s2 = sym_power(diag, 2);
    CHECK(std::abs(s2.at(0, 0) - va * va) <= 1e-14);
    CHECK(std::abs(s2.at(1, 1) - va * vb) <= 1e-14);
    CHECK(std::abs(s2.at(2, 2) - vb * vb) <= 1e-14);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            if (r != c) CHECK(std::abs(s2.at(r, c)) <= 1e-14);

    // conjugation oracle assembled from the raw pieces
    const Morphism oracle =
        compose(sym_isometry(a, 2), compose(tensor(diag, diag), sym_isometry_dag(a, 2)));
    CHECK(max_abs_diff(s2, oracle) == 0.0);
}

TEST_CASE("tensor power of the empty product is the scalar one") {
    const Morphism f = rand_morphism(SpaceObject::base(2), SpaceObject::base(2), 81);
    const Morphism f0 = tensor_power(f, 0);
    CHECK(f0.rows() == 1);
    CHECK(f0.cols() == 1);
    CHECK(f0.scalar_value() == cplx{1.0});
    CHECK(f0.dom == SpaceObject::unit());
}
