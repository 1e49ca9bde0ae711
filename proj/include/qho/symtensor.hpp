#ifndef QHO_SYMTENSOR_HPP
#define QHO_SYMTENSOR_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qho/morphism.hpp"

namespace qho {

std::uint64_t binom(std::uint64_t n, std::uint64_t k);
double factorial(std::uint64_t n);

/// Occupation-number basis of the n-fold symmetric power of a d-dimensional
/// space: all non-decreasing index tuples of length n over {0..d-1}, in
/// lexicographic order. This ordering fixes every downstream matrix layout.
struct MultisetBasis {
    std::size_t base_dim;
    std::size_t degree;
    std::vector<std::vector<std::size_t>> elements;
};

MultisetBasis multiset_basis(std::size_t d, std::size_t n);

/// The object carried by the n-fold symmetric power functor.
struct SymmetricSpace {
    SpaceObject base;
    std::size_t degree;
    SpaceObject object;
};

SymmetricSpace symmetric_space(const SpaceObject& base, std::size_t n);

/// Plain n-fold tensor power of a space (Unit for n = 0).
SpaceObject tensor_power_space(const SpaceObject& a, std::size_t n);

/// Unitary on A^(x)n moving factor i to position perm[i].
Morphism permutation_unitary(const SpaceObject& a, const std::vector<std::size_t>& perm);

/// Coisometry s: A^(x)n -> S_n(A) and its adjoint isometry s^dag. The column
/// of s^dag for a multiset with multiplicities m_i spreads weight 1/sqrt(M)
/// over its M = n!/prod(m_i!) distinct arrangements, which makes s s^dag the
/// exact identity on the symmetric power.
Morphism sym_isometry(const SpaceObject& a, std::size_t n);
Morphism sym_isometry_dag(const SpaceObject& a, std::size_t n);

/// Orthogonal projection s^dag s onto the symmetric subspace of A^(x)n.
Morphism symmetrizer(const SpaceObject& a, std::size_t n);

Morphism tensor_power(const Morphism& f, std::size_t n);

/// S_n(f) = s_B f^(x)n s_A^dag.
Morphism sym_power(const Morphism& f, std::size_t n);

}  // namespace qho

#endif
