#ifndef QHO_SPACE_HPP
#define QHO_SPACE_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace qho {

/// A finite-dimensional space with structure metadata. Structure tags are
/// what composition checks compare, so ill-typed pipelines fail early even
/// when dimensions happen to agree.
///
/// Comparison works on a canonical form in which the associator and the
/// unitors are strict: nested tensors are flattened, one-dimensional base
/// factors collapse to the unit, and every zero-dimensional space is the
/// zero object (the empty biproduct). Dual is an involutive wrapper.
class SpaceObject {
public:
    enum class Kind { Base, Unit, Tensor, Biproduct, Fock, Dual };

    SpaceObject() : kind_(Kind::Unit), dim_(1) {}

    static SpaceObject base(std::size_t d);
    static SpaceObject unit();
    static SpaceObject zero();
    static SpaceObject tensor(SpaceObject left, SpaceObject right);
    static SpaceObject tensor_list(std::vector<SpaceObject> parts);
    static SpaceObject biproduct(std::vector<SpaceObject> parts);
    static SpaceObject fock(SpaceObject base, std::size_t cutoff, std::size_t dim);
    static SpaceObject dual(SpaceObject inner);

    Kind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }
    std::size_t cutoff() const { return cutoff_; }
    const std::vector<SpaceObject>& parts() const { return parts_; }

    bool is_unit_like() const { return dim_ == 1 && canonical().kind_ == Kind::Unit; }
    bool is_zero() const { return dim_ == 0; }

    /// Canonical form used for equality (strict unitors/associator).
    SpaceObject canonical() const;

    /// Structural equality modulo the strict coherence isomorphisms.
    friend bool operator==(const SpaceObject& a, const SpaceObject& b);
    friend bool operator!=(const SpaceObject& a, const SpaceObject& b) { return !(a == b); }

    /// Short human-readable form, e.g. "F(C^2;N=3)(x)C^2".
    std::string describe() const;

private:
    Kind kind_;
    std::size_t dim_;
    std::vector<SpaceObject> parts_;  // Tensor/Biproduct: members; Fock/Dual: single child
    std::size_t cutoff_ = 0;          // Fock only

    static bool canon_equal(const SpaceObject& a, const SpaceObject& b);
};

/// Grading of a single basis index: the sum of Fock sector numbers across
/// all graded factors of the space (ungraded factors contribute zero).
std::size_t index_degree(const SpaceObject& space, std::size_t index);

}  // namespace qho

#endif
