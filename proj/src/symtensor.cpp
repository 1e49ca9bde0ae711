#include "qho/symtensor.hpp"

#include <algorithm>
#include <cmath>

#include "qho/errors.hpp"

namespace qho {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);  // exact: r is always a binomial along the way
    }
    return r;
}

double factorial(std::uint64_t n) {
    double r = 1.0;
    for (std::uint64_t i = 2; i <= n; ++i) r *= static_cast<double>(i);
    return r;
}

MultisetBasis multiset_basis(std::size_t d, std::size_t n) {
    MultisetBasis basis{d, n, {}};
    if (n == 0) {
        basis.elements.push_back({});
        return basis;
    }
    if (d == 0) return basis;  // no tuples over an empty alphabet
    std::vector<std::size_t> tuple(n, 0);
    while (true) {
        basis.elements.push_back(tuple);
        // next non-decreasing tuple in lexicographic order
        std::size_t i = n;
        while (i > 0 && tuple[i - 1] == d - 1) --i;
        if (i == 0) break;
        const std::size_t v = tuple[i - 1] + 1;
        for (std::size_t j = i - 1; j < n; ++j) tuple[j] = v;
    }
    return basis;
}

SymmetricSpace symmetric_space(const SpaceObject& base, std::size_t n) {
    if (n == 0) return {base, 0, SpaceObject::unit()};
    if (n == 1) return {base, 1, base};
    const std::size_t dim = static_cast<std::size_t>(binom(base.dim() + n - 1, n));
    return {base, n, SpaceObject::base(dim)};
}

SpaceObject tensor_power_space(const SpaceObject& a, std::size_t n) {
    if (n == 0) return SpaceObject::unit();
    if (n == 1) return a;
    return SpaceObject::tensor_list(std::vector<SpaceObject>(n, a));
}

Morphism permutation_unitary(const SpaceObject& a, const std::vector<std::size_t>& perm) {
    const std::size_t n = perm.size();
    const std::size_t d = a.dim();
    const SpaceObject power = tensor_power_space(a, n);
    Morphism m(power, power);
    std::vector<std::size_t> digits(n), moved(n);
    for (std::size_t col = 0; col < power.dim(); ++col) {
        std::size_t rest = col;
        for (std::size_t i = n; i-- > 0;) {
            digits[i] = rest % d;
            rest /= d;
        }
        for (std::size_t i = 0; i < n; ++i) moved[perm[i]] = digits[i];
        std::size_t row = 0;
        for (std::size_t i = 0; i < n; ++i) row = row * d + moved[i];
        m.at(row, col) = 1.0;
    }
    return m;
}

Morphism sym_isometry_dag(const SpaceObject& a, std::size_t n) {
    const std::size_t d = a.dim();
    const MultisetBasis basis = multiset_basis(d, n);
    const SpaceObject sym = symmetric_space(a, n).object;
    Morphism m(sym, tensor_power_space(a, n));
    for (std::size_t col = 0; col < basis.elements.size(); ++col) {
        std::vector<std::size_t> arrangement = basis.elements[col];
        // count of distinct arrangements M = n! / prod(multiplicity!)
        double mcount = factorial(n);
        std::size_t run = 1;
        for (std::size_t i = 1; i <= arrangement.size(); ++i) {
            if (i < arrangement.size() && arrangement[i] == arrangement[i - 1]) {
                ++run;
            } else {
                mcount /= factorial(run);
                run = 1;
            }
        }
        const double weight = 1.0 / std::sqrt(mcount);
        do {
            std::size_t row = 0;
            for (std::size_t v : arrangement) row = row * d + v;
            m.at(row, col) = weight;
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    }
    return m;
}

Morphism sym_isometry(const SpaceObject& a, std::size_t n) {
    return dagger(sym_isometry_dag(a, n));
}

Morphism symmetrizer(const SpaceObject& a, std::size_t n) {
    const Morphism sdag = sym_isometry_dag(a, n);
    return compose(sdag, dagger(sdag));
}

Morphism tensor_power(const Morphism& f, std::size_t n) {
    Morphism m = scalar(1.0);
    for (std::size_t i = 0; i < n; ++i) m = tensor(m, f);
    return m;
}

Morphism sym_power(const Morphism& f, std::size_t n) {
    const Morphism s_cod = sym_isometry(f.cod, n);
    const Morphism sdag_dom = sym_isometry_dag(f.dom, n);
    return compose(s_cod, compose(tensor_power(f, n), sdag_dom));
}

}  // namespace qho
