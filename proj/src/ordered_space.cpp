#include "eadual/ordered_space.hpp"

#include <algorithm>

namespace eadual {

OrderUnitSpace::OrderUnitSpace(std::size_t dim, Cone cone, Vec unit)
    : dim_(dim), cone_(std::move(cone)), unit_(std::move(unit)) {
    if (cone_.dim() != dim_) throw DimensionMismatch("order-unit space: cone dimension");
    require_dim(unit_, dim_, "order unit");
    if (!cone_.is_pointed()) throw PreconditionError("order-unit space: cone must be pointed");
    if (!cone_.is_generating())
        throw PreconditionError("order-unit space: cone must span the ambient space");
    if (!cone_.contains(unit_)) throw PreconditionError("order unit must lie in the cone");
    // Strong order unit for a closed generating cone means the unit is
    // interior: strictly positive against every facet.
    for (const Vec& h : cone_.halfspaces())
        if (dot(h, unit_) <= 0)
            throw PreconditionError("unit is not a strong order unit (not interior)");
}

Polytope OrderUnitSpace::unit_ball() const {
    std::vector<Halfspace> ineqs;
    for (const Vec& h : cone_.halfspaces()) {
        Rat hu = dot(h, unit_);
        ineqs.push_back({h, hu});        // h.(u - x) >= 0
        ineqs.push_back({neg(h), hu});   // h.(x + u) >= 0
    }
    return Polytope::from_halfspaces(dim_, std::move(ineqs));
}

BaseNormSpace::BaseNormSpace(std::size_t dim, Cone cone, Vec trace)
    : dim_(dim), cone_(std::move(cone)), trace_(std::move(trace)) {
    if (cone_.dim() != dim_) throw DimensionMismatch("base-norm space: cone dimension");
    require_dim(trace_, dim_, "trace functional");
    if (!cone_.is_pointed()) throw PreconditionError("base-norm space: cone must be pointed");
    for (const Vec& g : cone_.generators())
        if (dot(trace_, g) <= 0)
            throw PreconditionError(
                "trace must be strictly positive on nonzero cone points");
}

Polytope base_of(const BaseNormSpace& space) {
    Matrix verts;
    for (const Vec& g : space.cone().generators())
        verts.push_back(scale(Rat(1) / dot(space.trace(), g), g));
    if (verts.empty()) return Polytope::empty(space.dim());
    return Polytope::from_vertices(space.dim(), std::move(verts));
}

Polytope unit_ball_of(const BaseNormSpace& space) {
    Polytope base = base_of(space);
    if (base.is_empty()) throw PreconditionError("unit_ball_of: base is empty");
    Matrix verts = base.vertices();
    for (const Vec& v : base.vertices()) verts.push_back(neg(v));
    return Polytope::from_vertices(space.dim(), std::move(verts));
}

IntervalEA::IntervalEA(const OrderUnitSpace& space)
    : space_(&space), interval_(Polytope::empty(0)) {
    std::vector<Halfspace> ineqs;
    for (const Vec& h : space.cone().halfspaces()) {
        ineqs.push_back({neg(h), Rat(0)});          // h.x >= 0
        ineqs.push_back({h, dot(h, space.unit())});  // h.(u - x) >= 0
    }
    interval_ = Polytope::from_halfspaces(space.dim(), std::move(ineqs));
}

bool IntervalEA::contains(const Vec& a) const { return interval_.contains(a); }

Vec IntervalEA::orth(const Vec& a) const {
    require_dim(a, space_->dim(), "interval element");
    return sub(space_->unit(), a);
}

std::optional<Vec> IntervalEA::sum(const Vec& a, const Vec& b) const {
    Vec s = add(a, b);
    if (!space_->cone().contains(sub(space_->unit(), s))) return std::nullopt;
    return s;
}

IntervalEA unit_interval(const OrderUnitSpace& space) { return IntervalEA(space); }

Vec PredicateSpace::unit() const {
    switch (variant_) {
        case PredicateVariant::LexPlane:
        case PredicateVariant::OpenHalfPlane:
            return {Rat(0), Rat(1)};
        case PredicateVariant::OpenQuadrant:
            return {Rat(1), Rat(1)};
    }
    throw std::logic_error("unreachable");
}

bool PredicateSpace::cone_contains(const Vec& v) const {
    require_dim(v, 2, "predicate cone point");
    const Rat& x = v[0];
    const Rat& y = v[1];
    switch (variant_) {
        case PredicateVariant::LexPlane:
            return (x >= 0 && y == 0) || y > 0;
        case PredicateVariant::OpenHalfPlane:
            return y > 0 || (x == 0 && y == 0);
        case PredicateVariant::OpenQuadrant:
            return (x == 0 && y == 0) || (x > 0 && y > 0);
    }
    throw std::logic_error("unreachable");
}

bool PredicateSpace::in_interval(const Vec& x, const Vec& a) const {
    return cone_contains(sub(a, x)) && cone_contains(add(a, x));
}

const char* variant_name(PredicateVariant v) {
    switch (v) {
        case PredicateVariant::LexPlane:
            return "LexPlane";
        case PredicateVariant::OpenHalfPlane:
            return "OpenHalfPlane";
        case PredicateVariant::OpenQuadrant:
            return "OpenQuadrant";
    }
    return "?";
}

std::optional<PredicateVariant> variant_from_name(const std::string& name) {
    if (name == "LexPlane") return PredicateVariant::LexPlane;
    if (name == "OpenHalfPlane") return PredicateVariant::OpenHalfPlane;
    if (name == "OpenQuadrant") return PredicateVariant::OpenQuadrant;
    return std::nullopt;
}

GaugeResult norm(const OrderUnitSpace& space, const Vec& x) {
    return gauge(space.unit_ball(), x);
}

GaugeResult norm(const BaseNormSpace& space, const Vec& x) {
    require_dim(x, space.dim(), "norm point");
    if (space.is_zero_space()) return {GaugeKind::Value, Rat(0)};
    return gauge(unit_ball_of(space), x);
}

GaugeResult norm(const PredicateSpace& space, const Vec& v) {
    require_dim(v, 2, "norm point");
    const Rat& x = v[0];
    const Rat& y = v[1];
    switch (space.variant()) {
        case PredicateVariant::LexPlane:
        case PredicateVariant::OpenHalfPlane:
            // Order interval [-u, u] is the strip |y| < 1 (plus boundary
            // slivers), so the gauge is |y| and the x-axis is its kernel.
            if (y == 0) {
                if (x == 0) return {GaugeKind::Value, Rat(0)};
                return {GaugeKind::ZeroOnRay, Rat(0)};
            }
            return {GaugeKind::Value, rat_abs(y)};
        case PredicateVariant::OpenQuadrant:
            // [-w, w] is the open square with two corners; gauge max(|x|, |y|).
            return {GaugeKind::Value, std::max(rat_abs(x), rat_abs(y))};
    }
    throw std::logic_error("unreachable");
}

const char* arch_class_name(ArchClass c) {
    switch (c) {
        case ArchClass::Archimedean:
            return "Archimedean";
        case ArchClass::AlmostArchimedeanOnly:
            return "AlmostArchimedeanOnly";
        case ArchClass::NoInfinitesimalsOnly:
            return "NoInfinitesimalsOnly";
        case ArchClass::HasInfinitesimals:
            return "HasInfinitesimals";
    }
    return "?";
}

ArchReport classify_archimedean(const OrderUnitSpace&) {
    // Polyhedral cones are closed, and closed cones give archimedean
    // order-unit spaces.
    return {ArchClass::Archimedean, std::nullopt};
}

Decision decide_archimedean(const PredicateSpace& space) {
    Vec one_zero{Rat(1), Rat(0)};
    Vec minus_one_zero{Rat(-1), Rat(0)};
    switch (space.variant()) {
        case PredicateVariant::LexPlane:
            // u/n - (1,0) = (-1, 1/n) is in the cone for every n, yet
            // -(1,0) is not.
            return {false, one_zero};
        case PredicateVariant::OpenHalfPlane:
            // Same witness: (-1, 1/n) has positive second coordinate.
            return {false, one_zero};
        case PredicateVariant::OpenQuadrant:
            // w/n - (-1,0) = (1 + 1/n, 1/n) has both coordinates positive,
            // yet (1,0) is outside the cone.
            return {false, minus_one_zero};
    }
    throw std::logic_error("unreachable");
}

Decision decide_almost_archimedean(const PredicateSpace& space) {
    Vec one_zero{Rat(1), Rat(0)};
    switch (space.variant()) {
        case PredicateVariant::LexPlane:
        case PredicateVariant::OpenHalfPlane:
            // (1,0) sits in [-u/n, u/n] for every n: both (∓1, 1/n) lie in
            // the cone. A nonzero point of seminorm 0.
            return {false, one_zero};
        case PredicateVariant::OpenQuadrant:
            // -w/n <= (x,y) <= w/n pins |x|, |y| < 1/n for every n, so
            // only the origin qualifies.
            return {true, std::nullopt};
    }
    throw std::logic_error("unreachable");
}

Decision decide_no_infinitesimals(const PredicateSpace& space) {
    Vec one_zero{Rat(1), Rat(0)};
    switch (space.variant()) {
        case PredicateVariant::LexPlane:
            // Cone points below every u/n are exactly {(x, 0) : x >= 0}.
            return {false, one_zero};
        case PredicateVariant::OpenHalfPlane:
            // A nonzero cone point has y > 0 and u/n - (x,y) leaves the
            // cone once 1/n <= y.
            return {true, std::nullopt};
        case PredicateVariant::OpenQuadrant:
            return {true, std::nullopt};
    }
    throw std::logic_error("unreachable");
}

ArchReport classify_archimedean(const PredicateSpace& space) {
    Decision arch = decide_archimedean(space);
    if (arch.holds) return {ArchClass::Archimedean, std::nullopt};
    Decision almost = decide_almost_archimedean(space);
    if (almost.holds) return {ArchClass::AlmostArchimedeanOnly, arch.witness};
    Decision noinf = decide_no_infinitesimals(space);
    if (noinf.holds) return {ArchClass::NoInfinitesimalsOnly, almost.witness};
    return {ArchClass::HasInfinitesimals, noinf.witness};
}

}  // namespace eadual
