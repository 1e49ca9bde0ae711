#ifndef QHO_EXPR_HPP
#define QHO_EXPR_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qho/fock.hpp"

namespace qho::expr {

/// Ambient evaluation context: bound morphisms plus the Fock parameters
/// shared by the builtins. `with(d=..,N=..){..}` scopes overrides.
struct Environment {
    std::map<std::string, Morphism> bindings;
    std::size_t dim = 2;
    std::size_t cutoff = 3;
    LadderCoefficients coefficients{};
};

/// Abstract syntax. Sequencing reads left to right in application order:
/// "f ; g" evaluates to g . f.
struct Expr {
    enum class Op {
        Ident,
        Compose,  // n-ary, left-to-right pipeline
        Tensor,   // n-ary
        Add,      // n-ary
        Dag,
        Scale,
        Name,
        With,
        Comult,   // d, optional explicit cutoff
        Counit,   // e
        Eps,      // eps
        Eta,      // eta (unit of the adjunction at the basis-copy comonoid)
        Vac,      // vac
        Swap,     // swap on A (x) A
        Zeta,
        Theta,
        Raise,    // raise(x)
        Lower,    // lower(x)
        Coh,      // coh(x)
        Sym,      // sym(n): A^(x)n -> S_n(A)
        Proj,     // proj(n): F -> S_n
        Inj,      // inj(n): S_n -> F
    };

    Op op;
    std::vector<Expr> children;
    std::string ident;                  // Ident and the Raise/Lower/Coh argument
    cplx factor{};                      // Scale
    std::optional<std::size_t> index;   // Sym/Proj/Inj degree, Comult cutoff override
    std::optional<std::size_t> with_dim;
    std::optional<std::size_t> with_cutoff;
    std::size_t line = 1;
    std::size_t column = 1;

    // filled in by typecheck()
    SpaceObject dom;
    SpaceObject cod;

    friend bool operator==(const Expr& a, const Expr& b);
};

/// LL(1) recursive-descent parse; whitespace-insensitive. `;` binds loosest,
/// then `+`, then `*`; dag/scale/name are call-like atoms. Throws SyntaxError
/// with a line/column position.
Expr parse_expr(const std::string& text);

/// Infers dom/cod on every node. Throws TypeError naming the offending
/// subexpression and both spaces.
void typecheck(Expr& e, const Environment& env);

/// Structural recursion over the checked tree. Referentially transparent:
/// identical expression and environment give identical matrices.
Morphism eval_expr(const Expr& e, const Environment& env);

/// Canonical text form (fixed associativity and minimal parentheses);
/// parsing the output reproduces the tree.
std::string pretty_print(const Expr& e);

}  // namespace qho::expr

#endif
