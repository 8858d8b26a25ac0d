#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eadual/cone.hpp"
#include "eadual/linalg.hpp"
#include "eadual/polytope.hpp"
#include "eadual/sampling.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace eadual;

namespace {

Vec qv(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

Polytope unit_square() {
    return Polytope::from_vertices(2, {qv({-1, -1}), qv({-1, 1}), qv({1, -1}), qv({1, 1})});
}

bool certificate_checks(const Polytope& p, const std::vector<Halfspace>& ineqs,
                        const std::vector<Equality>& eqs) {
    const auto& cert = p.infeasibility();
    if (!cert) return false;
    Vec combo = zero_vec(p.dim());
    Rat total = 0;
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
        if (cert->ineq_mults[i] < 0) return false;
        combo = add(combo, scale(cert->ineq_mults[i], ineqs[i].normal));
        total += cert->ineq_mults[i] * ineqs[i].offset;
    }
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        combo = add(combo, scale(cert->eq_mults[i], eqs[i].normal));
        total += cert->eq_mults[i] * eqs[i].offset;
    }
    return is_zero_vec(combo) && total < 0;
}

}  // namespace

TEST_CASE("solve_linear: identity system") {
    LinearSolution s = solve_linear({qv({1, 0}), qv({0, 1})}, qv({1, 2}));
    REQUIRE(s.particular.has_value());
    CHECK(*s.particular == qv({1, 2}));
    CHECK(s.kernel.empty());
}

TEST_CASE("solve_linear: one equation in the plane") {
    LinearSolution s = solve_linear({qv({1, 1})}, qv({1}));
    REQUIRE(s.particular.has_value());
    CHECK(*s.particular == qv({1, 0}));
    REQUIRE(s.kernel.size() == 1);
    // Direction space is the line through (1, -1).
    CHECK(primitive_signed(s.kernel[0]) == primitive_signed(qv({1, -1})));
}

TEST_CASE("solve_linear: contradictory rows") {
    LinearSolution s = solve_linear({qv({1, 0}), qv({1, 0})}, qv({1, 2}));
    CHECK(!s.particular.has_value());
    REQUIRE(s.inconsistency.has_value());
    // Multipliers combine the rows to 0 = nonzero.
    Vec c = *s.inconsistency;
    CHECK(is_zero_vec(add(scale(c[0], qv({1, 0})), scale(c[1], qv({1, 0})))));
    CHECK(c[0] * 1 + c[1] * 2 != 0);
}

TEST_CASE("dd: square from halfspaces") {
    std::vector<Halfspace> hs = {{qv({1, 0}), Rat(1)},
                                 {qv({-1, 0}), Rat(1)},
                                 {qv({0, 1}), Rat(1)},
                                 {qv({0, -1}), Rat(1)}};
    Polytope p = Polytope::from_halfspaces(2, hs);
    Matrix expect = {qv({-1, -1}), qv({-1, 1}), qv({1, -1}), qv({1, 1})};
    CHECK(p.vertices() == expect);
    CHECK(p.vertices() == testing::brute_force_vertices(2, hs, {}));
    CHECK(p.equalities().empty());
    CHECK(p.halfspaces().size() == 4);
}

TEST_CASE("dd: single point gets an equality description") {
    Polytope p = Polytope::from_vertices(2, {qv({0, 0})});
    REQUIRE(p.vertices().size() == 1);
    CHECK(p.vertices()[0] == qv({0, 0}));
    // The affine hull is cut by two independent equalities x = 0, y = 0.
    REQUIRE(p.equalities().size() == 2);
    for (const Equality& e : p.equalities()) CHECK(e.offset == 0);
    CHECK(p.contains(qv({0, 0})));
    CHECK(!p.contains(qv({0, 1})));
}

TEST_CASE("dd: contradictory bounds give the empty polytope with certificate") {
    std::vector<Halfspace> hs = {{qv({1, 0}), Rat(0)}, {qv({-1, 0}), Rat(-1)}};
    Polytope p = Polytope::from_halfspaces(2, hs);
    CHECK(p.is_empty());
    CHECK(p.vertices().empty());
    CHECK(certificate_checks(p, hs, {}));
}

TEST_CASE("dd: inconsistent equalities give a certificate too") {
    std::vector<Equality> eqs = {{qv({1, 1}), Rat(0)}, {qv({1, 1}), Rat(1)}};
    Polytope p = Polytope::from_halfspaces(2, {}, eqs);
    CHECK(p.is_empty());
    CHECK(certificate_checks(p, {}, eqs));
}

TEST_CASE("dd: unbounded input is rejected") {
    CHECK_THROWS_AS(Polytope::from_halfspaces(2, {{qv({1, 0}), Rat(1)}}), UnboundedError);
}

TEST_CASE("contains: square membership") {
    Polytope sq = unit_square();
    CHECK(sq.contains({Rat(1, 2), Rat(1, 2)}));
    CHECK(!sq.contains(qv({2, 0})));
}

TEST_CASE("contains: cone boundary ray") {
    Cone orthant = Cone::from_halfspaces(2, {qv({1, 0}), qv({0, 1})});
    CHECK(orthant.contains({Rat(3, 7), Rat(0)}));
    CHECK(!orthant.contains(qv({-1, 0})));
}

TEST_CASE("dual_cone: first orthant is self-dual") {
    Cone orthant = Cone::from_generators(2, {qv({1, 0}), qv({0, 1})});
    Cone dual = dual_cone(orthant);
    CHECK(dual == orthant);
}

TEST_CASE("dual_cone: a ray dualizes to a halfplane") {
    Cone ray = Cone::from_generators(2, {qv({1, 1})});
    Cone dual = dual_cone(ray);
    CHECK(!dual.is_pointed());
    CHECK(dual.halfspaces() == Matrix{qv({1, 1})});
    CHECK(dual.contains(qv({1, -1})));
    CHECK(dual.contains(qv({-1, 1})));
    CHECK(dual.contains(qv({0, 1})));
    CHECK(!dual.contains(qv({-1, -1})));
}

TEST_CASE("dual_cone: involution on the lifted square cone") {
    Matrix gens;
    Polytope sq = unit_square();
    for (const Vec& v : sq.vertices()) {
        Vec g = v;
        g.push_back(Rat(1));
        gens.push_back(g);
    }
    Cone c = Cone::from_generators(3, gens);
    CHECK(dual_cone(dual_cone(c)) == c);
}

TEST_CASE("gauge: unit square examples") {
    Polytope sq = unit_square();
    GaugeResult g1 = gauge(sq, {Rat(1, 2), Rat(0)});
    CHECK(g1.kind == GaugeKind::Value);
    CHECK(g1.value == Rat(1, 2));
    GaugeResult g2 = gauge(sq, qv({1, 1}));
    CHECK(g2.kind == GaugeKind::Value);
    CHECK(g2.value == 1);
}

TEST_CASE("gauge: direction outside the span is infinite") {
    Polytope segment = Polytope::from_vertices(2, {qv({-1, 0}), qv({1, 0})});
    CHECK(gauge(segment, qv({0, 1})).kind == GaugeKind::Infinite);
    CHECK(gauge(segment, qv({1, 0})).value == 1);
}

TEST_CASE("gauge: grid oracle agrees on the square") {
    Polytope sq = unit_square();
    auto member = [&](const Vec& x, const Rat& alpha) {
        if (alpha == 0) return is_zero_vec(x);
        Vec y = scale(Rat(1) / alpha, x);
        return sq.contains(y);
    };
    RandomSource rng(11);
    for (int i = 0; i < 50; ++i) {
        Vec x = {rng.rat_signed(), rng.rat_signed()};
        GaugeResult g = gauge(sq, x);
        REQUIRE(g.finite());
        Rat grid = testing::gauge_grid_oracle(member, x, 64, 8);
        REQUIRE(grid >= 0);
        // Smallest grid point admitting x brackets the exact gauge.
        CHECK(g.seminorm() <= grid);
        CHECK(grid - g.seminorm() <= Rat(1, 64));
    }
}

TEST_CASE("property: V->H->V is the identity on canonical forms") {
    RandomSource rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t dim = 2 + rng.next_below(3);
        std::size_t nv = 1 + rng.next_below(8);
        Matrix pts;
        for (std::size_t i = 0; i < nv; ++i) {
            Vec v;
            for (std::size_t d = 0; d < dim; ++d) v.push_back(rng.rat_signed(3, 4));
            pts.push_back(v);
        }
        Polytope p = Polytope::from_vertices(dim, pts);
        Polytope q = Polytope::from_halfspaces(dim, p.halfspaces(), p.equalities());
        CHECK(p == q);
        CHECK(p.halfspaces() == q.halfspaces());
        CHECK(p.equalities() == q.equalities());
    }
}

TEST_CASE("property: enumerated vertices match the brute-force oracle") {
    RandomSource rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t dim = 2 + rng.next_below(2);
        // Random box-bounded system plus a few random cuts.
        std::vector<Halfspace> hs;
        for (std::size_t d = 0; d < dim; ++d) {
            hs.push_back({unit_vec(dim, d), Rat(2)});
            hs.push_back({neg(unit_vec(dim, d)), Rat(2)});
        }
        std::size_t cuts = rng.next_below(4);
        for (std::size_t c = 0; c < cuts; ++c) {
            Vec n;
            for (std::size_t d = 0; d < dim; ++d) n.push_back(rng.rat_signed(2, 3));
            if (is_zero_vec(n)) continue;
            hs.push_back({n, rng.rat_signed(2, 2)});
        }
        Polytope p = Polytope::from_halfspaces(dim, hs);
        Matrix oracle = testing::brute_force_vertices(dim, hs, {});
        CHECK(p.vertices() == oracle);
    }
}

TEST_CASE("property: vertices are contained, dilated vertices are not") {
    RandomSource rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t dim = 2 + rng.next_below(3);
        Matrix pts;
        std::size_t nv = 2 + rng.next_below(6);
        for (std::size_t i = 0; i < nv; ++i) {
            Vec v;
            for (std::size_t d = 0; d < dim; ++d) v.push_back(rng.rat_signed(3, 4));
            pts.push_back(v);
        }
        Polytope p = Polytope::from_vertices(dim, pts);
        Vec c = p.centroid();
        for (const Vec& v : p.vertices()) {
            CHECK(p.contains(v));
            if (v == c) continue;
            Vec out = add(c, scale(Rat(1001, 1000), sub(v, c)));
            CHECK(!p.contains(out));
        }
    }
}

TEST_CASE("property: gauge homogeneity and subadditivity") {
    RandomSource rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t dim = 2 + rng.next_below(2);
        Matrix pts;
        std::size_t nv = 1 + rng.next_below(4);
        for (std::size_t i = 0; i < nv; ++i) {
            Vec v;
            for (std::size_t d = 0; d < dim; ++d) v.push_back(rng.rat_signed(3, 4));
            pts.push_back(v);
            pts.push_back(neg(v));  // symmetric hull
        }
        Polytope ball = Polytope::from_vertices(dim, pts);
        Matrix gens = ball.vertices();
        for (int s = 0; s < 20; ++s) {
            Vec x = zero_vec(dim), y = zero_vec(dim);
            for (const Vec& g : gens) {
                x = add(x, scale(rng.rat_signed(2, 3), g));
                y = add(y, scale(rng.rat_signed(2, 3), g));
            }
            Rat lambda = rng.rat_signed(3, 4);
            GaugeResult gx = gauge(ball, x);
            GaugeResult gy = gauge(ball, y);
            GaugeResult gs = gauge(ball, add(x, y));
            GaugeResult gl = gauge(ball, scale(lambda, x));
            REQUIRE(gx.finite());
            REQUIRE(gy.finite());
            REQUIRE(gs.finite());
            REQUIRE(gl.finite());
            CHECK(gl.seminorm() == rat_abs(lambda) * gx.seminorm());
            CHECK(gs.seminorm() <= gx.seminorm() + gy.seminorm());
        }
    }
}

TEST_CASE("property: dual_cone is an involution on pointed full cones") {
    RandomSource rng(29);
    int done = 0;
    while (done < 30) {
        std::size_t dim = 2 + rng.next_below(3);
        Matrix gens;
        std::size_t ng = dim + rng.next_below(4);
        for (std::size_t i = 0; i < ng; ++i) {
            Vec g;
            for (std::size_t d = 0; d + 1 < dim; ++d) g.push_back(rng.rat_signed(3, 3));
            g.push_back(Rat(1) + rng.rat01(4));  // positive last coordinate => pointed
            gens.push_back(g);
        }
        Cone c = Cone::from_generators(dim, gens);
        if (!c.is_generating()) continue;
        REQUIRE(c.is_pointed());
        CHECK(dual_cone(dual_cone(c)) == c);
        ++done;
    }
}

TEST_CASE("zero-dimensional polytopes behave") {
    Polytope point = Polytope::from_vertices(0, {Vec{}});
    CHECK(!point.is_empty());
    CHECK(point.contains(Vec{}));
    Polytope whole = Polytope::from_halfspaces(0, {});
    CHECK(whole.vertices() == Matrix{Vec{}});
    CHECK(Polytope::empty(0).is_empty());
}

TEST_CASE("redundant inputs are canonicalized, never rejected") {
    // Interior and duplicate points vanish from the vertex list.
    Polytope p = Polytope::from_vertices(
        2, {qv({0, 0}), qv({1, 1}), qv({-1, -1}), qv({-1, 1}), qv({1, -1}), qv({1, 1})});
    CHECK(p == unit_square());
    // Redundant halfspaces vanish from the facet list.
    std::vector<Halfspace> hs = {{qv({1, 0}), Rat(1)},  {qv({-1, 0}), Rat(1)},
                                 {qv({0, 1}), Rat(1)},  {qv({0, -1}), Rat(1)},
                                 {qv({1, 1}), Rat(5)},  {qv({2, 0}), Rat(2)}};
    Polytope q = Polytope::from_halfspaces(2, hs);
    CHECK(q == unit_square());
    CHECK(q.halfspaces().size() == 4);
}
