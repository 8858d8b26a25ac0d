// Finite effect algebras: axiom validation over explicit tables, the
// standard small constructions, morphism checking, and the state polytope.
//
// Elements are opaque ids into a name table; all structure lives in the
// orthosupplement map and the partial-sum table, and the validator is the
// single source of truth for well-formedness.

#ifndef EADUAL_EFFECT_ALGEBRA_HPP
#define EADUAL_EFFECT_ALGEBRA_HPP

#include "eadual/polytope.hpp"
#include "eadual/vec.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace eadual {

using ElemId = int;
constexpr ElemId kNoSum = -1;

struct EffectAlgebraTables {
    std::vector<std::string> names;
    ElemId zero = 0;
    ElemId one = 0;
    std::vector<ElemId> orth;              // total map
    std::vector<std::vector<ElemId>> sum;  // kNoSum where undefined

    std::size_t size() const { return names.size(); }
};

struct AxiomViolation {
    std::string axiom;  // "identity", "commutativity", "associativity",
                        // "orthosupplement", "zero-one", "structure", ...
    std::vector<ElemId> witness;
    std::string detail;
};

class FiniteEffectAlgebra {
  public:
    std::size_t size() const { return t_.size(); }
    ElemId zero() const { return t_.zero; }
    ElemId one() const { return t_.one; }
    ElemId orth(ElemId a) const { return t_.orth[a]; }
    bool defined(ElemId a, ElemId b) const { return t_.sum[a][b] != kNoSum; }
    ElemId sum(ElemId a, ElemId b) const { return t_.sum[a][b]; }
    const std::string& name(ElemId a) const { return t_.names[a]; }
    const EffectAlgebraTables& tables() const { return t_; }

    // a <= b in the algebraic order: some c with a + c = b.
    bool leq(ElemId a, ElemId b) const;

  private:
    friend std::variant<FiniteEffectAlgebra, AxiomViolation> validate(
        const EffectAlgebraTables&);
    explicit FiniteEffectAlgebra(EffectAlgebraTables t) : t_(std::move(t)) {}
    EffectAlgebraTables t_;
};

// Checks every axiom instance by exhaustion; returns the first violation
// with a concrete witness. The one-element algebra (0 = 1) is rejected.
std::variant<FiniteEffectAlgebra, AxiomViolation> validate(const EffectAlgebraTables& tables);

// Convenience for construction code paths that must not fail.
FiniteEffectAlgebra validate_or_throw(const EffectAlgebraTables& tables);

// Subsets of {1..n}; disjoint union as sum, complement as orthosupplement.
FiniteEffectAlgebra boolean_ea(unsigned n);
// {0, 1/n, ..., 1} with k + m defined iff k + m <= n.
FiniteEffectAlgebra chain_ea(unsigned n);
// {0, 1} plus n incomparable complement pairs (height-2 orthomodular lattice).
FiniteEffectAlgebra mo_ea(unsigned n);
// Componentwise structure on the cartesian product.
FiniteEffectAlgebra product_ea(const FiniteEffectAlgebra& a, const FiniteEffectAlgebra& b);
// 0 and 1 shared, summands otherwise disjoint with no cross sums.
FiniteEffectAlgebra horizontal_sum_ea(const FiniteEffectAlgebra& a,
                                      const FiniteEffectAlgebra& b);

struct EAMorphism {
    const FiniteEffectAlgebra* source;
    const FiniteEffectAlgebra* target;
    std::vector<ElemId> map;
};

struct MorphismCheck {
    bool ok;
    std::optional<std::pair<ElemId, ElemId>> witness;
    std::string reason;
};

MorphismCheck is_morphism(const EAMorphism& m);

// Exhaustive search, meant for algebras of at most ~10 elements.
std::optional<std::vector<ElemId>> find_isomorphism(const FiniteEffectAlgebra& a,
                                                    const FiniteEffectAlgebra& b);

struct StatePolytope {
    Polytope polytope;  // in Q^{|A|}, one coordinate per element
};

// States as the solution polytope of the additivity constraints; vertices
// are enumerated exactly.
StatePolytope state_polytope(const FiniteEffectAlgebra& algebra);

// Is phi (a point of Q^{|A|}) a morphism into [0,1] over Q?
bool is_state(const FiniteEffectAlgebra& algebra, const Vec& phi);

}  // namespace eadual

#endif
