// Finite-dimensional ordered vector spaces over Q: polyhedral order-unit
// and base-norm spaces, their gauges and unit intervals, plus the three
// hard-coded non-closed predicate cones that separate the archimedean
// conditions. Polyhedral cones are closed, so polyhedral order-unit spaces
// are always archimedean; the predicate variants carry per-variant exact
// decision procedures instead.

#ifndef EADUAL_ORDERED_SPACE_HPP
#define EADUAL_ORDERED_SPACE_HPP

#include "eadual/cone.hpp"
#include "eadual/polytope.hpp"

#include <optional>
#include <string>

namespace eadual {

// (A, A+, u): pointed generating polyhedral cone with a strong order unit.
class OrderUnitSpace {
  public:
    OrderUnitSpace(std::size_t dim, Cone cone, Vec unit);
    static OrderUnitSpace zero_space() { return OrderUnitSpace(); }

    std::size_t dim() const { return dim_; }
    const Cone& cone() const { return cone_; }
    const Vec& unit() const { return unit_; }

    bool leq(const Vec& x, const Vec& y) const { return cone_.contains(sub(y, x)); }
    // Unit ball [-u, u] as a polytope.
    Polytope unit_ball() const;

  private:
    OrderUnitSpace() : dim_(0), cone_(Cone::zero(0)) {}
    std::size_t dim_;
    Cone cone_;
    Vec unit_;
};

// (E, E+, tau): pointed polyhedral cone with a trace functional that is
// strictly positive on nonzero cone points (so the base is bounded).
class BaseNormSpace {
  public:
    BaseNormSpace(std::size_t dim, Cone cone, Vec trace);
    static BaseNormSpace zero_space() { return BaseNormSpace(); }

    std::size_t dim() const { return dim_; }
    const Cone& cone() const { return cone_; }
    const Vec& trace() const { return trace_; }
    bool is_zero_space() const { return dim_ == 0; }

    bool leq(const Vec& x, const Vec& y) const { return cone_.contains(sub(y, x)); }

  private:
    BaseNormSpace() : dim_(0), cone_(Cone::zero(0)) {}
    std::size_t dim_;
    Cone cone_;
    Vec trace_;
};

// {x in cone : trace.x = 1}; empty for the zero space.
Polytope base_of(const BaseNormSpace& space);
// Convex hull of the base and its negation; requires a nonempty base.
Polytope unit_ball_of(const BaseNormSpace& space);

// The symbolic effect algebra [0, u] of an order-unit space.
class IntervalEA {
  public:
    explicit IntervalEA(const OrderUnitSpace& space);

    const Vec& unit() const { return space_->unit(); }
    bool contains(const Vec& a) const;
    Vec orth(const Vec& a) const;  // u - a
    // a + b when a + b <= u; nullopt otherwise.
    std::optional<Vec> sum(const Vec& a, const Vec& b) const;
    // [0, u] as a polytope.
    const Polytope& polytope() const { return interval_; }

  private:
    const OrderUnitSpace* space_;
    Polytope interval_;
};

IntervalEA unit_interval(const OrderUnitSpace& space);

// The appendix's three non-closed cones in the plane, with exact
// membership predicates and closed-form seminorms.
enum class PredicateVariant { LexPlane, OpenHalfPlane, OpenQuadrant };

class PredicateSpace {
  public:
    explicit PredicateSpace(PredicateVariant variant) : variant_(variant) {}

    PredicateVariant variant() const { return variant_; }
    std::size_t dim() const { return 2; }
    Vec unit() const;
    bool cone_contains(const Vec& x) const;
    bool leq(const Vec& x, const Vec& y) const { return cone_contains(sub(y, x)); }
    // Membership in the order interval [-a, a].
    bool in_interval(const Vec& x, const Vec& a) const;

  private:
    PredicateVariant variant_;
};

const char* variant_name(PredicateVariant v);
std::optional<PredicateVariant> variant_from_name(const std::string& name);

GaugeResult norm(const OrderUnitSpace& space, const Vec& x);
GaugeResult norm(const BaseNormSpace& space, const Vec& x);
GaugeResult norm(const PredicateSpace& space, const Vec& x);

enum class ArchClass {
    Archimedean,
    AlmostArchimedeanOnly,
    NoInfinitesimalsOnly,
    HasInfinitesimals,
};

const char* arch_class_name(ArchClass c);

struct ArchReport {
    ArchClass cls;
    std::optional<Vec> witness;
};

ArchReport classify_archimedean(const OrderUnitSpace& space);
ArchReport classify_archimedean(const PredicateSpace& space);

// The three individual decision procedures, exposed so the strictly
// decreasing chain archimedean => almost archimedean => no nonzero
// infinitesimals can be checked per variant. A witness accompanies every
// negative answer.
struct Decision {
    bool holds;
    std::optional<Vec> witness;
};
Decision decide_archimedean(const PredicateSpace& space);
Decision decide_almost_archimedean(const PredicateSpace& space);
Decision decide_no_infinitesimals(const PredicateSpace& space);

}  // namespace eadual

#endif
