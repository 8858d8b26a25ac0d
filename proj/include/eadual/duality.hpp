// State/effect duality at finite dimension: signed state and effect
// spaces, the dual-space constructions, the restriction isomorphism, the
// adjunction's unit and counit with exact isomorphism verdicts, and the
// two constructive extension algorithms behind the fullness results.

#ifndef EADUAL_DUALITY_HPP
#define EADUAL_DUALITY_HPP

#include "eadual/distribution.hpp"
#include "eadual/effect_algebra.hpp"
#include "eadual/ordered_space.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace eadual {

// The span of the state polytope of an effect algebra, re-coordinatized so
// the cone over the states is full-dimensional. `basis` rows embed span
// coordinates back into Q^{|A|}; states project onto the pivot coordinates.
struct SignedStateSpace {
    FiniteEffectAlgebra algebra;
    StatePolytope states;    // in the original Q^{|A|} coordinates
    BaseNormSpace space;     // cone over the states in span coordinates
    Matrix basis;            // rows: span basis vectors inside Q^{|A|}
    std::vector<std::size_t> pivots;  // projection coordinates

    Vec embed(const Vec& span_coords) const;    // span -> Q^{|A|}
    Vec project(const Vec& full_coords) const;  // Q^{|A|} -> span (on the span)
};

SignedStateSpace stat_pm(const FiniteEffectAlgebra& algebra);

// Affine functionals (c, b) acting as c.t + b on the carrier reduced to
// full dimension inside its affine hull via x = origin + dirs^T t.
struct SignedEffectSpace {
    Polytope carrier;           // the input convex set X
    Polytope reduced;           // X in full-dimensional coordinates
    Vec origin;                 // affine base point
    Matrix dirs;                // rows: affine basis directions
    OrderUnitSpace space;       // functionals with the constant-1 unit
    Polytope effect_interval;   // [0, u]: the effect polytope F(X)

    Vec reduce_point(const Vec& x) const;   // carrier -> reduced coordinates
    Vec lift_point(const Vec& t) const;     // reduced -> carrier coordinates
    // Value of the functional (c, b) at a reduced point t.
    static Rat evaluate(const Vec& functional, const Vec& t);
    // The unique functional taking the given values at the reduced vertices.
    Vec functional_from_vertex_values(const Vec& values) const;
};

SignedEffectSpace eff_pm(const Polytope& X);

// Dual of an order-unit space: states with evaluation-at-unit trace.
BaseNormSpace dual_ous_to_bns(const OrderUnitSpace& A);
// Dual of a (generating) base-norm space: the trace becomes the unit.
OrderUnitSpace dual_bns_to_ous(const BaseNormSpace& E);

// Restriction of functionals on E to affine maps on its base: an explicit
// linear isomorphism dual_bns_to_ous(E) -> eff_pm(base_of(E)).space.
struct RestrictionIso {
    Matrix forward;
    Matrix inverse;
    bool bijective;
    bool positive_both_ways;
    bool unit_preserving;
    bool ok() const { return bijective && positive_both_ways && unit_preserving; }
};

RestrictionIso restrict_rho(const BaseNormSpace& E);

struct DualityReport {
    bool injective = false;
    std::optional<std::pair<ElemId, ElemId>> injectivity_witness;
    bool order_embedding = false;
    bool surjective_verdict = false;
    std::string surjective_reason;
    bool iso() const { return injective && order_embedding && surjective_verdict; }
};

struct CounitResult {
    SignedStateSpace states;
    std::optional<SignedEffectSpace> effects;  // absent when there are no states
    Matrix element_images;                     // functional (c, b) per element
    DualityReport report;
};

// epsilon_A: each element becomes the evaluation functional on the states.
CounitResult counit(const FiniteEffectAlgebra& algebra);

struct UnitMapResult {
    SignedEffectSpace effects;
    BaseNormSpace double_dual;
    Polytope double_dual_base;
    Matrix vertex_images;  // (t, 1) per reduced vertex of X
    DualityReport report;
};

// eta_X: vertices of X as evaluation functionals on the effects; iso iff
// they match the base of the double dual exactly.
UnitMapResult unit_map(const Polytope& X);

struct TriangleReport {
    bool first_ok = false;   // state side, checked on every state vertex
    bool second_ok = false;  // effect side, checked on effect-interval vertices
    std::string failure;
    bool ok() const { return first_ok && second_ok; }
};

TriangleReport triangle_identity_states(const FiniteEffectAlgebra& algebra);
TriangleReport triangle_identity_effects(const Polytope& X);
TriangleReport triangle_identities(const FiniteEffectAlgebra& algebra, const Polytope& X);

struct BaseMapExtension {
    Matrix matrix;  // linear map, rows act on E-coordinates
    bool positive = false;
    bool trace_preserving = false;
    bool agrees_on_base = false;
    // Witness of a violated affine dependency when the input is inconsistent.
    std::optional<Vec> dependency_witness;
    bool ok() const { return positive && trace_preserving && agrees_on_base; }
};

// Linear extension of a base-vertex assignment between base-norm spaces.
// Vertex images are indexed against base_of(E).vertices().
BaseMapExtension extend_base_map(const BaseNormSpace& E, const BaseNormSpace& F,
                                 const Matrix& vertex_images);

struct IntervalOracleOptions {
    unsigned samples = 32;
    std::uint64_t seed = 2024;
};

struct IntervalExtension {
    Matrix matrix;
    bool unital = false;
    bool positive = false;
    bool samples_agree = false;
    std::string failure;  // "oracle not additive ..." / "unit mismatch" with witness
    Matrix basis;         // the rescaled generators used to pin the map
    bool ok() const { return unital && positive && samples_agree; }
};

// Reconstructs the linear map behind an effect-algebra morphism presented
// as a point oracle on [0, u_A], then verifies additivity and agreement on
// sampled defined sums.
IntervalExtension extend_interval_morphism(const OrderUnitSpace& A, const OrderUnitSpace& B,
                                           const std::function<Vec(const Vec&)>& oracle,
                                           const IntervalOracleOptions& options = {});

}  // namespace eadual

#endif
