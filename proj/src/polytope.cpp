#include "eadual/polytope.hpp"

#include "eadual/dd.hpp"

#include <algorithm>
#include <cassert>

namespace eadual {

namespace {

// Canonical facet/equality lists for the cone over `vertices` lifted to
// height 1: rays of the dual cone give facets, its lineality gives the
// affine-hull equations.
void facets_from_vertices(std::size_t dim, const Matrix& vertices,
                          std::vector<Halfspace>& out_ineqs, std::vector<Equality>& out_eqs) {
    Matrix lifted;
    lifted.reserve(vertices.size());
    for (const Vec& v : vertices) {
        Vec g = v;
        g.push_back(Rat(1));
        lifted.push_back(std::move(g));
    }
    DDPair dual = extreme_rays(dim + 1, lifted);
    out_ineqs.clear();
    out_eqs.clear();
    for (const Vec& r : dual.rays) {
        // r = (c, c0) with c.v + c0 >= 0 on all vertices  =>  (-c).x <= c0.
        // Rays come reduced modulo the dual lineality, so facets implied by
        // the affine-hull equations show up with a zero normal part.
        Vec normal(r.begin(), r.end() - 1);
        if (is_zero_vec(normal)) continue;
        out_ineqs.push_back({neg(normal), r.back()});
    }
    for (const Vec& l : dual.lineality) {
        Vec normal(l.begin(), l.end() - 1);
        // c.x + c0 = 0 on the hull  =>  c.x = -c0; lineality of the dual
        // always has nonzero normal part here since (0, c0) cannot vanish
        // on lifted vertices unless c0 = 0.
        if (is_zero_vec(normal)) continue;
        out_eqs.push_back({normal, -l.back()});
    }
    std::sort(out_ineqs.begin(), out_ineqs.end(), [](const Halfspace& a, const Halfspace& b) {
        int c = lex_compare(a.normal, b.normal);
        return c != 0 ? c < 0 : a.offset < b.offset;
    });
    std::sort(out_eqs.begin(), out_eqs.end(), [](const Equality& a, const Equality& b) {
        int c = lex_compare(a.normal, b.normal);
        return c != 0 ? c < 0 : a.offset < b.offset;
    });
}

struct ReducedSystem {
    // x = origin + basis^T t; inequality rows A t <= b in the t-space.
    Vec origin;
    Matrix basis;  // kernel basis vectors of the equality system (rows)
    Matrix ineq_rows;
    Vec ineq_rhs;
    std::optional<Vec> eq_inconsistency;  // multipliers when equalities conflict
};

ReducedSystem eliminate_equalities(std::size_t dim, const std::vector<Halfspace>& ineqs,
                                   const std::vector<Equality>& eqs) {
    ReducedSystem rs;
    Matrix eq_rows;
    Vec eq_rhs;
    for (const Equality& e : eqs) {
        eq_rows.push_back(e.normal);
        eq_rhs.push_back(e.offset);
    }
    LinearSolution sol = eq_rows.empty()
                             ? LinearSolution{zero_vec(dim), identity_matrix(dim), std::nullopt}
                             : solve_linear(eq_rows, eq_rhs);
    if (!sol.particular) {
        rs.eq_inconsistency = sol.inconsistency;
        return rs;
    }
    rs.origin = *sol.particular;
    rs.basis = sol.kernel;
    for (const Halfspace& h : ineqs) {
        Vec row(rs.basis.size());
        for (std::size_t j = 0; j < rs.basis.size(); ++j) row[j] = dot(h.normal, rs.basis[j]);
        rs.ineq_rows.push_back(std::move(row));
        rs.ineq_rhs.push_back(h.offset - dot(h.normal, rs.origin));
    }
    return rs;
}

// Farkas multipliers for an infeasible system A t <= b: lambda >= 0 with
// lambda*A = 0 and lambda*b < 0, found as an extreme ray of the dual
// feasibility cone.
Vec farkas_multipliers(const Matrix& rows, const Vec& rhs) {
    const std::size_t m = rows.size();
    const std::size_t k = rows.empty() ? 0 : rows[0].size();
    Matrix halfspaces;
    for (std::size_t i = 0; i < m; ++i) halfspaces.push_back(unit_vec(m, i));  // lambda_i >= 0
    for (std::size_t j = 0; j < k; ++j) {  // sum_i lambda_i A_ij = 0, as two inequalities
        Vec col(m);
        for (std::size_t i = 0; i < m; ++i) col[i] = rows[i][j];
        halfspaces.push_back(col);
        halfspaces.push_back(neg(col));
    }
    Vec bneg = neg(rhs);  // -lambda.b >= 0
    halfspaces.push_back(bneg);
    DDPair dd = extreme_rays(m, halfspaces);
    // lambda_i >= 0 keeps this cone pointed, so rays alone suffice.
    for (const Vec& r : dd.rays)
        if (dot(rhs, r) < 0) return r;
    throw std::logic_error("farkas_multipliers: no certificate found for infeasible system");
}

}  // namespace

Polytope Polytope::empty(std::size_t dim) {
    Polytope p;
    p.dim_ = dim;
    return p;
}

Polytope Polytope::from_vertices(std::size_t dim, Matrix vertices) {
    for (const Vec& v : vertices) require_dim(v, dim, "polytope vertex");
    Polytope p;
    p.dim_ = dim;
    if (vertices.empty()) return p;
    facets_from_vertices(dim, vertices, p.halfspaces_, p.equalities_);

    // Re-derive the vertex set from the facets so non-extreme input points
    // are dropped and the stored set is canonical.
    std::sort(vertices.begin(), vertices.end(), VecLess{});
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (vertices.size() == 1) {
        p.vertices_ = std::move(vertices);
        return p;
    }
    Polytope back = from_halfspaces(dim, p.halfspaces_, p.equalities_);
    p.vertices_ = back.vertices_;
    return p;
}

Polytope Polytope::from_halfspaces(std::size_t dim, std::vector<Halfspace> ineqs,
                                   std::vector<Equality> eqs) {
    for (const Halfspace& h : ineqs) require_dim(h.normal, dim, "halfspace normal");
    for (const Equality& e : eqs) require_dim(e.normal, dim, "equality normal");
    Polytope p;
    p.dim_ = dim;

    ReducedSystem rs = eliminate_equalities(dim, ineqs, eqs);
    if (rs.eq_inconsistency) {
        // Equality rows alone are contradictory.
        Vec mu = *rs.eq_inconsistency;
        Rat val = 0;
        for (std::size_t i = 0; i < eqs.size(); ++i) val += mu[i] * eqs[i].offset;
        if (val > 0) mu = neg(mu);
        p.certificate_ = InfeasibilityCertificate{zero_vec(ineqs.size()), mu};
        return p;
    }

    const std::size_t k = rs.basis.size();
    // Homogenize: {(t, s) : A t - b s <= 0, s >= 0}, then rays with s > 0
    // are vertices and rays with s = 0 are recession directions.
    Matrix cone_halfspaces;
    for (std::size_t i = 0; i < rs.ineq_rows.size(); ++i) {
        Vec h = neg(rs.ineq_rows[i]);
        h.push_back(rs.ineq_rhs[i]);
        cone_halfspaces.push_back(std::move(h));
    }
    cone_halfspaces.push_back(unit_vec(k + 1, k));
    DDPair dd = extreme_rays(k + 1, cone_halfspaces);

    Matrix verts;
    bool has_recession = !dd.lineality.empty();
    for (const Vec& r : dd.rays) {
        const Rat& s = r.back();
        if (s > 0) {
            Vec t(r.begin(), r.end() - 1);
            for (Rat& x : t) x /= s;
            Vec x = rs.origin;
            for (std::size_t j = 0; j < k; ++j) x = add(x, scale(t[j], rs.basis[j]));
            verts.push_back(std::move(x));
        } else {
            has_recession = true;
        }
    }
    if (verts.empty()) {
        Vec lambda = farkas_multipliers(rs.ineq_rows, rs.ineq_rhs);
        // Lift to the original system: multipliers for the equality rows.
        Vec combo = zero_vec(dim);
        Rat total = 0;
        for (std::size_t i = 0; i < ineqs.size(); ++i) {
            combo = add(combo, scale(lambda[i], ineqs[i].normal));
            total += lambda[i] * ineqs[i].offset;
        }
        Vec mu = zero_vec(eqs.size());
        if (!eqs.empty()) {
            Matrix eq_t(dim, Vec(eqs.size(), Rat(0)));
            for (std::size_t i = 0; i < eqs.size(); ++i)
                for (std::size_t j = 0; j < dim; ++j) eq_t[j][i] = eqs[i].normal[j];
            LinearSolution sol = solve_linear(eq_t, neg(combo));
            if (!sol.particular)
                throw std::logic_error("infeasibility certificate lift failed");
            mu = *sol.particular;
            for (std::size_t i = 0; i < eqs.size(); ++i) total += mu[i] * eqs[i].offset;
        }
        if (total >= 0) throw std::logic_error("infeasibility certificate does not verify");
        p.certificate_ = InfeasibilityCertificate{std::move(lambda), std::move(mu)};
        return p;
    }
    if (has_recession)
        throw UnboundedError("halfspace system describes an unbounded set");

    std::sort(verts.begin(), verts.end(), VecLess{});
    p.vertices_ = std::move(verts);
    facets_from_vertices(dim, p.vertices_, p.halfspaces_, p.equalities_);
    return p;
}

bool Polytope::contains(const Vec& point) const {
    require_dim(point, dim_, "contains point");
    if (is_empty()) return false;
    for (const Equality& e : equalities_)
        if (dot(e.normal, point) != e.offset) return false;
    for (const Halfspace& h : halfspaces_)
        if (dot(h.normal, point) > h.offset) return false;
    return true;
}

std::size_t Polytope::affine_dim() const {
    if (is_empty()) return 0;
    Matrix dirs;
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        dirs.push_back(sub(vertices_[i], vertices_[0]));
    return dirs.empty() ? 0 : rank(dirs);
}

Vec Polytope::centroid() const {
    if (is_empty()) throw PreconditionError("centroid of empty polytope");
    Vec c = zero_vec(dim_);
    for (const Vec& v : vertices_) c = add(c, v);
    return scale(Rat(1) / Rat(static_cast<long>(vertices_.size())), c);
}

GaugeResult gauge(const Polytope& ball, const Vec& x) {
    require_dim(x, ball.dim(), "gauge point");
    if (!ball.contains(zero_vec(ball.dim())))
        throw PreconditionError("gauge: ball does not contain 0");
    if (is_zero_vec(x)) return {GaugeKind::Value, Rat(0)};
    // Off the span of the ball no dilate ever absorbs x.
    for (const Equality& e : ball.equalities())
        if (dot(e.normal, x) != 0) return {GaugeKind::Infinite, Rat(0)};
    Rat best = 0;
    bool positive = false;
    for (const Halfspace& h : ball.halfspaces()) {
        Rat v = dot(h.normal, x);
        if (h.offset == 0) {
            if (v > 0) return {GaugeKind::Infinite, Rat(0)};
            continue;
        }
        Rat ratio = v / h.offset;
        if (ratio > best) {
            best = ratio;
            positive = true;
        }
    }
    if (!positive) return {GaugeKind::ZeroOnRay, Rat(0)};
    return {GaugeKind::Value, best};
}

}  // namespace eadual
