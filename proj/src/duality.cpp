#include "eadual/duality.hpp"

#include "eadual/sampling.hpp"

#include <algorithm>

namespace eadual {

Vec SignedStateSpace::embed(const Vec& span_coords) const {
    Vec x = zero_vec(algebra.size());
    for (std::size_t j = 0; j < basis.size(); ++j) x = add(x, scale(span_coords[j], basis[j]));
    return x;
}

Vec SignedStateSpace::project(const Vec& full_coords) const {
    Vec c(pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j) c[j] = full_coords[pivots[j]];
    return c;
}

SignedStateSpace stat_pm(const FiniteEffectAlgebra& algebra) {
    StatePolytope sp = state_polytope(algebra);
    if (sp.polytope.is_empty())
        return SignedStateSpace{algebra, std::move(sp), BaseNormSpace::zero_space(), {}, {}};

    // RREF rows of the vertex matrix: canonical basis of the linear span of
    // the states. A vector in the span has RREF coefficients equal to its
    // pivot coordinates, so projection is coordinate selection.
    Matrix basis = rref(sp.polytope.vertices());
    std::vector<std::size_t> pivots;
    for (const Vec& b : basis) {
        std::size_t p = 0;
        while (p < b.size() && b[p] == 0) ++p;
        pivots.push_back(p);
    }
    const std::size_t m = basis.size();

    SignedStateSpace out{algebra, std::move(sp), BaseNormSpace::zero_space(), std::move(basis),
                         std::move(pivots)};
    Matrix gens;
    for (const Vec& v : out.states.polytope.vertices()) gens.push_back(out.project(v));
    Vec trace(m);
    for (std::size_t j = 0; j < m; ++j) trace[j] = out.basis[j][algebra.one()];
    out.space = BaseNormSpace(m, Cone::from_generators(m, std::move(gens)), std::move(trace));

    if (!(base_of(out.space) == Polytope::from_vertices(m, [&] {
            Matrix pv;
            for (const Vec& v : out.states.polytope.vertices()) pv.push_back(out.project(v));
            return pv;
        }())))
        throw std::logic_error("stat_pm: base of the signed space differs from the states");
    return out;
}

Vec SignedEffectSpace::reduce_point(const Vec& x) const {
    const std::size_t n = carrier.dim();
    Matrix rows(n, Vec(dirs.size(), Rat(0)));
    for (std::size_t j = 0; j < dirs.size(); ++j)
        for (std::size_t r = 0; r < n; ++r) rows[r][j] = dirs[j][r];
    LinearSolution sol = solve_linear(rows, sub(x, origin));
    if (!sol.particular)
        throw PreconditionError("point is outside the affine hull of the carrier");
    return *sol.particular;
}

Vec SignedEffectSpace::lift_point(const Vec& t) const {
    Vec x = origin;
    for (std::size_t j = 0; j < dirs.size(); ++j) x = add(x, scale(t[j], dirs[j]));
    return x;
}

Rat SignedEffectSpace::evaluate(const Vec& functional, const Vec& t) {
    if (functional.size() != t.size() + 1)
        throw DimensionMismatch("affine functional vs point dimension");
    Rat v = functional.back();
    for (std::size_t i = 0; i < t.size(); ++i) v += functional[i] * t[i];
    return v;
}

Vec SignedEffectSpace::functional_from_vertex_values(const Vec& values) const {
    const Matrix& verts = carrier.vertices();
    if (values.size() != verts.size())
        throw DimensionMismatch("one value per carrier vertex required");
    Matrix rows;
    for (const Vec& v : verts) {
        Vec row = reduce_point(v);
        row.push_back(Rat(1));
        rows.push_back(std::move(row));
    }
    LinearSolution sol = solve_linear(rows, values);
    if (!sol.particular)
        throw PreconditionError("vertex values are not affinely consistent");
    if (!sol.kernel.empty())
        throw std::logic_error("affine functional on a polytope is underdetermined");
    return *sol.particular;
}

SignedEffectSpace eff_pm(const Polytope& X) {
    if (X.is_empty()) throw PreconditionError("eff_pm: carrier must be nonempty");
    const Matrix& verts = X.vertices();
    Vec origin = verts[0];
    Matrix dirs;
    for (std::size_t i = 1; i < verts.size(); ++i) {
        Vec d = sub(verts[i], origin);
        dirs.push_back(d);
        if (rank(dirs) < dirs.size()) dirs.pop_back();
    }
    SignedEffectSpace es{X,
                         Polytope::empty(0),
                         std::move(origin),
                         std::move(dirs),
                         OrderUnitSpace::zero_space(),
                         Polytope::empty(0)};
    const std::size_t k = es.dirs.size();
    Matrix reduced_verts;
    for (const Vec& v : verts) reduced_verts.push_back(es.reduce_point(v));
    es.reduced = Polytope::from_vertices(k, reduced_verts);

    Matrix cone_halfspaces;
    for (const Vec& t : reduced_verts) {
        Vec h = t;
        h.push_back(Rat(1));
        cone_halfspaces.push_back(std::move(h));
    }
    es.space = OrderUnitSpace(k + 1, Cone::from_halfspaces(k + 1, std::move(cone_halfspaces)),
                              unit_vec(k + 1, k));
    es.effect_interval = IntervalEA(es.space).polytope();
    return es;
}

BaseNormSpace dual_ous_to_bns(const OrderUnitSpace& A) {
    return BaseNormSpace(A.dim(), dual_cone(A.cone()), A.unit());
}

OrderUnitSpace dual_bns_to_ous(const BaseNormSpace& E) {
    if (E.is_zero_space()) return OrderUnitSpace::zero_space();
    if (!E.cone().is_generating())
        throw PreconditionError("dual_bns_to_ous: cone must span the space");
    return OrderUnitSpace(E.dim(), dual_cone(E.cone()), E.trace());
}

RestrictionIso restrict_rho(const BaseNormSpace& E) {
    Polytope base = base_of(E);
    if (base.is_empty()) throw PreconditionError("restrict_rho: base is empty");
    OrderUnitSpace dual = dual_bns_to_ous(E);
    SignedEffectSpace es = eff_pm(base);
    if (es.dirs.size() + 1 != E.dim())
        throw std::logic_error("restrict_rho: base has unexpected affine dimension");

    // A functional phi on E restricts to the affine map t -> phi.(origin +
    // dirs^T t); its coefficients are the pairings with the direction
    // vectors and the base point.
    Matrix forward = es.dirs;
    forward.push_back(es.origin);

    RestrictionIso iso{std::move(forward), {}, false, false, false};
    auto inv = mat_inverse(iso.forward);
    iso.bijective = inv.has_value();
    if (!iso.bijective) return iso;
    iso.inverse = std::move(*inv);

    iso.positive_both_ways = true;
    for (const Vec& g : dual.cone().generators())
        if (!es.space.cone().contains(mat_apply(iso.forward, g))) iso.positive_both_ways = false;
    for (const Vec& g : es.space.cone().generators())
        if (!dual.cone().contains(mat_apply(iso.inverse, g))) iso.positive_both_ways = false;
    iso.unit_preserving = mat_apply(iso.forward, dual.unit()) == es.space.unit();
    return iso;
}

CounitResult counit(const FiniteEffectAlgebra& algebra) {
    SignedStateSpace states = stat_pm(algebra);
    CounitResult out{std::move(states), std::nullopt, {}, {}};
    const ElemId n = static_cast<ElemId>(algebra.size());

    if (out.states.states.polytope.is_empty()) {
        // Every element becomes the empty functional on no states at all.
        out.report.injective = false;
        out.report.injectivity_witness = std::make_pair(algebra.zero(), algebra.one());
        out.report.order_embedding = false;
        out.report.surjective_verdict = false;
        out.report.surjective_reason =
            "state space is empty; the effects of the empty set form the one-point "
            "algebra, which a nontrivial algebra cannot match";
        return out;
    }

    Polytope base = base_of(out.states.space);
    SignedEffectSpace effects = eff_pm(base);

    // Image of element a: the affine functional on the state polytope whose
    // value at a state phi is phi(a).
    const Matrix& base_verts = base.vertices();
    for (ElemId a = 0; a < n; ++a) {
        Vec values(base_verts.size());
        for (std::size_t i = 0; i < base_verts.size(); ++i)
            values[i] = out.states.embed(base_verts[i])[a];
        out.element_images.push_back(effects.functional_from_vertex_values(values));
    }

    out.report.injective = true;
    for (ElemId a = 0; a < n && out.report.injective; ++a)
        for (ElemId b = a + 1; b < n; ++b)
            if (out.element_images[a] == out.element_images[b]) {
                out.report.injective = false;
                out.report.injectivity_witness = std::make_pair(a, b);
                break;
            }

    // Order embedding: a <= b algebraically iff the image difference is a
    // nonnegative affine map on the states.
    out.report.order_embedding = true;
    for (ElemId a = 0; a < n && out.report.order_embedding; ++a)
        for (ElemId b = 0; b < n; ++b) {
            bool alg = algebra.leq(a, b);
            bool spatial = effects.space.cone().contains(
                sub(out.element_images[b], out.element_images[a]));
            if (alg != spatial) {
                out.report.order_embedding = false;
                break;
            }
        }

    out.report.surjective_verdict = false;
    out.report.surjective_reason =
        "a finite effect algebra cannot fill the infinite unit interval of the "
        "effect space of its states";
    out.effects = std::move(effects);
    return out;
}

UnitMapResult unit_map(const Polytope& X) {
    if (X.is_empty()) throw PreconditionError("unit_map: polytope must be nonempty");
    SignedEffectSpace effects = eff_pm(X);
    BaseNormSpace double_dual = dual_ous_to_bns(effects.space);
    Polytope dd_base = base_of(double_dual);

    UnitMapResult out{std::move(effects), std::move(double_dual), std::move(dd_base), {}, {}};
    for (const Vec& v : out.effects.carrier.vertices()) {
        Vec t = out.effects.reduce_point(v);
        t.push_back(Rat(1));
        out.vertex_images.push_back(std::move(t));
    }

    out.report.injective = true;
    for (std::size_t i = 0; i < out.vertex_images.size() && out.report.injective; ++i)
        for (std::size_t j = i + 1; j < out.vertex_images.size(); ++j)
            if (out.vertex_images[i] == out.vertex_images[j]) {
                out.report.injective = false;
                out.report.injectivity_witness =
                    std::make_pair(static_cast<ElemId>(i), static_cast<ElemId>(j));
                break;
            }

    // Both cones must agree: the lifted carrier cone inside the double
    // dual's cone and conversely.
    Cone lifted = Cone::from_generators(out.effects.dirs.size() + 1, out.vertex_images);
    bool forward = true, backward = true;
    for (const Vec& g : lifted.generators())
        if (!out.double_dual.cone().contains(g)) forward = false;
    for (const Vec& g : out.double_dual.cone().generators())
        if (!lifted.contains(g)) backward = false;
    out.report.order_embedding = forward && backward;

    Matrix sorted = out.vertex_images;
    std::sort(sorted.begin(), sorted.end(), VecLess{});
    out.report.surjective_verdict = sorted == out.double_dual_base.vertices();
    out.report.surjective_reason =
        out.report.surjective_verdict
            ? "vertex sets of the carrier and of the double-dual base coincide"
            : "double-dual base has vertices outside the image";
    return out;
}

TriangleReport triangle_identity_states(const FiniteEffectAlgebra& algebra) {
    TriangleReport rep;
    CounitResult c = counit(algebra);
    rep.first_ok = true;
    if (!c.effects) {
        rep.second_ok = true;  // no states: both composites are empty maps
        return rep;
    }
    BaseNormSpace dd = dual_ous_to_bns(c.effects->space);
    Polytope dd_base = base_of(dd);
    const Polytope base = base_of(c.states.space);
    for (const Vec& w : base.vertices()) {
        Vec eta = c.effects->reduce_point(w);
        eta.push_back(Rat(1));
        if (!dd_base.contains(eta)) {
            rep.first_ok = false;
            rep.failure = "eta of a state is not a state of the effect algebra of effects";
            return rep;
        }
        Vec state = c.states.embed(w);
        for (ElemId a = 0; a < static_cast<ElemId>(algebra.size()); ++a) {
            // Pairing of eta(phi) with epsilon(a) must give back phi(a).
            if (dot(eta, c.element_images[a]) != state[a]) {
                rep.first_ok = false;
                rep.failure = "state triangle fails at element " + algebra.name(a) +
                              " and state " + vec_to_string(state);
                return rep;
            }
        }
    }
    rep.second_ok = true;
    return rep;
}

TriangleReport triangle_identity_effects(const Polytope& X) {
    TriangleReport rep;
    rep.first_ok = true;
    SignedEffectSpace es = eff_pm(X);
    BaseNormSpace dd = dual_ous_to_bns(es.space);
    Polytope dd_base = base_of(dd);
    SignedEffectSpace es2 = eff_pm(dd_base);

    rep.second_ok = true;
    for (const Vec& a : es.effect_interval.vertices()) {
        // epsilon of the effect a: the affine functional psi -> psi.a on the
        // states of F(X), i.e. on the double-dual base.
        Vec values(dd_base.vertices().size());
        for (std::size_t i = 0; i < dd_base.vertices().size(); ++i)
            values[i] = dot(dd_base.vertices()[i], a);
        Vec eps_a = es2.functional_from_vertex_values(values);

        // Precompose with eta: X -> dd_base, then re-read the coefficients
        // of the resulting affine map on X. The triangle demands it is a.
        Vec composite_values(X.vertices().size());
        for (std::size_t i = 0; i < X.vertices().size(); ++i) {
            Vec eta = es.reduce_point(X.vertices()[i]);
            eta.push_back(Rat(1));
            composite_values[i] =
                SignedEffectSpace::evaluate(eps_a, es2.reduce_point(eta));
        }
        Vec composite = es.functional_from_vertex_values(composite_values);
        if (composite != a) {
            rep.second_ok = false;
            rep.failure = "effect triangle fails at effect " + vec_to_string(a);
            return rep;
        }
    }
    return rep;
}

TriangleReport triangle_identities(const FiniteEffectAlgebra& algebra, const Polytope& X) {
    TriangleReport s = triangle_identity_states(algebra);
    TriangleReport e = triangle_identity_effects(X);
    TriangleReport rep;
    rep.first_ok = s.ok();
    rep.second_ok = e.ok();
    rep.failure = !s.ok() ? s.failure : e.failure;
    return rep;
}

BaseMapExtension extend_base_map(const BaseNormSpace& E, const BaseNormSpace& F,
                                 const Matrix& vertex_images) {
    BaseMapExtension out;
    if (E.is_zero_space()) {
        // The unique linear map from the zero space.
        out.matrix.assign(F.dim(), Vec{});
        out.positive = out.trace_preserving = out.agrees_on_base = true;
        return out;
    }
    if (!E.cone().is_generating())
        throw PreconditionError("extend_base_map: source cone must span the space");
    Polytope baseE = base_of(E);
    const Matrix& verts = baseE.vertices();
    if (vertex_images.size() != verts.size())
        throw DimensionMismatch("extend_base_map: one image per base vertex required");
    for (const Vec& img : vertex_images) require_dim(img, F.dim(), "vertex image");

    // Affine dependencies among base vertices (all linear dependencies have
    // coefficient sum 0 here, because the trace of every vertex is 1) must
    // be satisfied by the images.
    Matrix coord_rows(E.dim(), Vec(verts.size(), Rat(0)));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t r = 0; r < E.dim(); ++r) coord_rows[r][i] = verts[i][r];
    for (const Vec& dep : kernel_basis(coord_rows, verts.size())) {
        Vec image_combo = zero_vec(F.dim());
        for (std::size_t i = 0; i < verts.size(); ++i)
            image_combo = add(image_combo, scale(dep[i], vertex_images[i]));
        if (!is_zero_vec(image_combo)) {
            out.dependency_witness = dep;
            return out;
        }
    }

    // One linear solve per output coordinate, all sharing the vertex matrix.
    Matrix rows = verts;
    out.matrix.assign(F.dim(), Vec());
    for (std::size_t s = 0; s < F.dim(); ++s) {
        Vec rhs(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i) rhs[i] = vertex_images[i][s];
        LinearSolution sol = solve_linear(rows, rhs);
        if (!sol.particular || !sol.kernel.empty())
            throw std::logic_error("extend_base_map: solve was not uniquely determined");
        out.matrix[s] = *sol.particular;
    }

    out.positive = true;
    for (const Vec& g : E.cone().generators())
        if (!F.cone().contains(mat_apply(out.matrix, g))) out.positive = false;
    Vec pulled_trace(E.dim());
    for (std::size_t j = 0; j < E.dim(); ++j) {
        Rat s = 0;
        for (std::size_t r = 0; r < F.dim(); ++r) s += F.trace()[r] * out.matrix[r][j];
        pulled_trace[j] = s;
    }
    out.trace_preserving = pulled_trace == E.trace();
    out.agrees_on_base = true;
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (mat_apply(out.matrix, verts[i]) != vertex_images[i]) out.agrees_on_base = false;
    return out;
}

IntervalExtension extend_interval_morphism(const OrderUnitSpace& A, const OrderUnitSpace& B,
                                           const std::function<Vec(const Vec&)>& oracle,
                                           const IntervalOracleOptions& options) {
    IntervalExtension out;

    // Rescale each cone generator into [0, u]: the largest dilation factor
    // keeping it below the unit, computed against the facets.
    for (const Vec& g : A.cone().generators()) {
        Rat alpha = 0;
        bool first = true;
        for (const Vec& h : A.cone().halfspaces()) {
            Rat hg = dot(h, g);
            if (hg <= 0) continue;
            Rat bound = dot(h, A.unit()) / hg;
            if (first || bound < alpha) {
                alpha = bound;
                first = false;
            }
        }
        if (first) throw std::logic_error("generator admits arbitrary dilation below the unit");
        Vec e = scale(alpha, g);
        out.basis.push_back(e);
        if (rank(out.basis) < out.basis.size()) out.basis.pop_back();
        if (out.basis.size() == A.dim()) break;
    }
    if (out.basis.size() != A.dim())
        throw PreconditionError("extend_interval_morphism: generators do not span");

    Matrix rows = out.basis;
    Matrix images;
    for (const Vec& e : out.basis) images.push_back(oracle(e));
    for (const Vec& img : images) require_dim(img, B.dim(), "oracle image");
    out.matrix.assign(B.dim(), Vec());
    for (std::size_t s = 0; s < B.dim(); ++s) {
        Vec rhs(out.basis.size());
        for (std::size_t i = 0; i < out.basis.size(); ++i) rhs[i] = images[i][s];
        LinearSolution sol = solve_linear(rows, rhs);
        if (!sol.particular || !sol.kernel.empty())
            throw std::logic_error("extend_interval_morphism: basis solve not determined");
        out.matrix[s] = *sol.particular;
    }

    Vec oracle_unit = oracle(A.unit());
    if (oracle_unit != B.unit()) {
        out.failure = "unit mismatch: f(u) = " + vec_to_string(oracle_unit) +
                      " instead of " + vec_to_string(B.unit());
        return out;
    }
    if (mat_apply(out.matrix, A.unit()) != B.unit()) {
        out.failure =
            "oracle not additive: the basis values are inconsistent with f(u) at the unit";
        return out;
    }
    out.unital = true;

    out.positive = true;
    for (const Vec& g : A.cone().generators())
        if (!B.cone().contains(mat_apply(out.matrix, g))) out.positive = false;

    // Sampled law checks on defined sums inside [0, u].
    Polytope interval = IntervalEA(A).polytope();
    RandomSource rng(options.seed);
    out.samples_agree = true;
    for (unsigned s = 0; s < options.samples; ++s) {
        Vec a = rng.convex_point(interval.vertices());
        Vec b = scale(rng.rat01(), sub(A.unit(), a));  // a + b stays below u
        Vec ab = add(a, b);
        Vec fa = oracle(a), fb = oracle(b), fab = oracle(ab);
        if (fab != add(fa, fb)) {
            out.samples_agree = false;
            out.failure = "oracle not additive: f(a+b) != f(a)+f(b) at a = " +
                          vec_to_string(a) + ", b = " + vec_to_string(b);
            return out;
        }
        if (mat_apply(out.matrix, a) != fa) {
            out.samples_agree = false;
            out.failure =
                "oracle not additive: disagrees with its linear extension at a = " +
                vec_to_string(a);
            return out;
        }
        if (mat_apply(out.matrix, ab) != add(mat_apply(out.matrix, a), mat_apply(out.matrix, b))) {
            out.samples_agree = false;
            out.failure = "linear extension violated additivity (internal)";
            return out;
        }
    }
    return out;
}

}  // namespace eadual
