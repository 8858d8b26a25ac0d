// Exact-rational convex polytopes with double (V and H) descriptions.
//
// Every constructed polytope carries both representations, canonicalized:
// vertices are irredundant and lex-sorted, facets are irredundant with
// primitive integer normals, and equalities form the RREF basis of the
// affine hull's defining equations. The empty polytope is a first-class
// value and remembers a Farkas-style infeasibility certificate.

#ifndef EADUAL_POLYTOPE_HPP
#define EADUAL_POLYTOPE_HPP

#include "eadual/linalg.hpp"
#include "eadual/vec.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace eadual {

struct UnboundedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Halfspace {
    Vec normal;  // normal . x <= offset
    Rat offset;
    bool operator==(const Halfspace&) const = default;
};

struct Equality {
    Vec normal;  // normal . x == offset
    Rat offset;
    bool operator==(const Equality&) const = default;
};

// Multipliers proving {A x <= b, E x = f} empty:
// ineq_mults >= 0, ineq_mults*A + eq_mults*E = 0, ineq_mults*b + eq_mults*f < 0.
struct InfeasibilityCertificate {
    Vec ineq_mults;
    Vec eq_mults;
};

class Polytope {
  public:
    // Canonicalizes: duplicate and non-extreme points are dropped.
    static Polytope from_vertices(std::size_t dim, Matrix vertices);
    // Throws UnboundedError when the feasible set has a recession direction.
    static Polytope from_halfspaces(std::size_t dim, std::vector<Halfspace> ineqs,
                                    std::vector<Equality> eqs = {});
    static Polytope empty(std::size_t dim);

    std::size_t dim() const { return dim_; }
    bool is_empty() const { return vertices_.empty(); }
    const Matrix& vertices() const { return vertices_; }
    const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
    const std::vector<Equality>& equalities() const { return equalities_; }
    const std::optional<InfeasibilityCertificate>& infeasibility() const { return certificate_; }

    bool contains(const Vec& point) const;
    std::size_t affine_dim() const;  // dimension of the affine hull; 0 for a point
    Vec centroid() const;            // average of vertices; requires nonempty

    bool operator==(const Polytope& other) const {
        return dim_ == other.dim_ && vertices_ == other.vertices_;
    }

  private:
    Polytope() = default;
    std::size_t dim_ = 0;
    Matrix vertices_;
    std::vector<Halfspace> halfspaces_;
    std::vector<Equality> equalities_;
    std::optional<InfeasibilityCertificate> certificate_;
};

enum class GaugeKind { Value, ZeroOnRay, Infinite };

struct GaugeResult {
    GaugeKind kind;
    Rat value;  // meaningful for Value; 0 for ZeroOnRay
    bool finite() const { return kind != GaugeKind::Infinite; }
    // Seminorm value, with the kernel reported as 0.
    Rat seminorm() const { return kind == GaugeKind::Value ? value : Rat(0); }
};

// Minkowski functional of `ball` (which must contain 0) at x.
GaugeResult gauge(const Polytope& ball, const Vec& x);

}  // namespace eadual

#endif
