#include "eadual/effect_algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace eadual {

bool FiniteEffectAlgebra::leq(ElemId a, ElemId b) const {
    for (ElemId c = 0; c < static_cast<ElemId>(size()); ++c)
        if (defined(a, c) && sum(a, c) == b) return true;
    return false;
}

std::variant<FiniteEffectAlgebra, AxiomViolation> validate(const EffectAlgebraTables& t) {
    const ElemId n = static_cast<ElemId>(t.size());
    auto bad = [](std::string axiom, std::vector<ElemId> w, std::string detail) {
        return AxiomViolation{std::move(axiom), std::move(w), std::move(detail)};
    };
    auto in_range = [&](ElemId a) { return a >= 0 && a < n; };

    if (n == 0) return bad("structure", {}, "empty carrier");
    if (!in_range(t.zero) || !in_range(t.one))
        return bad("structure", {}, "zero/one outside carrier");
    if (t.orth.size() != t.size()) return bad("structure", {}, "orthosupplement map not total");
    for (ElemId a = 0; a < n; ++a)
        if (!in_range(t.orth[a])) return bad("structure", {a}, "dangling id in orth");
    if (t.sum.size() != t.size()) return bad("structure", {}, "sum table has wrong shape");
    for (ElemId a = 0; a < n; ++a) {
        if (t.sum[a].size() != t.size()) return bad("structure", {a}, "sum table has wrong shape");
        for (ElemId b = 0; b < n; ++b) {
            ElemId c = t.sum[a][b];
            if (c != kNoSum && !in_range(c)) return bad("structure", {a, b}, "dangling id in sums");
        }
    }
    if (t.zero == t.one)
        return bad("nontrivial", {t.zero},
                   "the one-element algebra with 0 = 1 is rejected");

    auto def = [&](ElemId a, ElemId b) { return t.sum[a][b] != kNoSum; };

    // Identity: 0 + a defined and equal to a.
    for (ElemId a = 0; a < n; ++a)
        if (!def(t.zero, a) || t.sum[t.zero][a] != a)
            return bad("identity", {a}, "0 + a must be defined and equal a");

    // Commutativity: defined both ways with equal value.
    for (ElemId a = 0; a < n; ++a)
        for (ElemId b = 0; b < n; ++b) {
            if (def(a, b) != def(b, a))
                return bad("commutativity", {a, b}, "sum defined in only one order");
            if (def(a, b) && t.sum[a][b] != t.sum[b][a])
                return bad("commutativity", {a, b}, "sum differs between orders");
        }

    // Associativity: b+c and a+(b+c) defined imply a+b, (a+b)+c defined
    // with the same total.
    for (ElemId a = 0; a < n; ++a)
        for (ElemId b = 0; b < n; ++b)
            for (ElemId c = 0; c < n; ++c) {
                if (!def(b, c)) continue;
                ElemId bc = t.sum[b][c];
                if (!def(a, bc)) continue;
                if (!def(a, b))
                    return bad("associativity", {a, b, c}, "a + b undefined");
                ElemId ab = t.sum[a][b];
                if (!def(ab, c))
                    return bad("associativity", {a, b, c}, "(a + b) + c undefined");
                if (t.sum[ab][c] != t.sum[a][bc])
                    return bad("associativity", {a, b, c}, "sums disagree");
            }

    // Orthosupplement: a' + a = 1 and a' unique with that property.
    for (ElemId a = 0; a < n; ++a) {
        ElemId ap = t.orth[a];
        if (!def(ap, a) || t.sum[ap][a] != t.one)
            return bad("orthosupplement", {a}, "orth(a) + a must equal 1");
        for (ElemId b = 0; b < n; ++b)
            if (b != ap && def(b, a) && t.sum[b][a] == t.one)
                return bad("orthosupplement", {a, b}, "second solution of b + a = 1");
    }
    if (t.orth[t.zero] != t.one)
        return bad("orthosupplement", {t.zero}, "1 must equal orth(0)");

    // Zero-one law: a + 1 defined forces a = 0.
    for (ElemId a = 0; a < n; ++a)
        if (def(a, t.one) && a != t.zero)
            return bad("zero-one", {a}, "a + 1 defined for a != 0");

    return FiniteEffectAlgebra(t);
}

FiniteEffectAlgebra validate_or_throw(const EffectAlgebraTables& tables) {
    auto r = validate(tables);
    if (auto* v = std::get_if<AxiomViolation>(&r))
        throw PreconditionError("invalid effect algebra: " + v->axiom + " (" + v->detail + ")");
    return std::get<FiniteEffectAlgebra>(std::move(r));
}

FiniteEffectAlgebra boolean_ea(unsigned n) {
    if (n < 1) throw PreconditionError("boolean_ea: n must be >= 1");
    if (n > 16) throw PreconditionError("boolean_ea: n too large for desk scale");
    const unsigned size = 1u << n;
    EffectAlgebraTables t;
    t.names.resize(size);
    for (unsigned s = 0; s < size; ++s) {
        std::string name = "{";
        bool first = true;
        for (unsigned i = 0; i < n; ++i)
            if (s & (1u << i)) {
                if (!first) name += ",";
                name += std::to_string(i + 1);
                first = false;
            }
        t.names[s] = name + "}";
    }
    t.zero = 0;
    t.one = static_cast<ElemId>(size - 1);
    t.orth.resize(size);
    for (unsigned s = 0; s < size; ++s) t.orth[s] = static_cast<ElemId>((size - 1) ^ s);
    t.sum.assign(size, std::vector<ElemId>(size, kNoSum));
    for (unsigned a = 0; a < size; ++a)
        for (unsigned b = 0; b < size; ++b)
            if ((a & b) == 0) t.sum[a][b] = static_cast<ElemId>(a | b);
    return validate_or_throw(t);
}

FiniteEffectAlgebra chain_ea(unsigned n) {
    if (n < 1) throw PreconditionError("chain_ea: n must be >= 1");
    EffectAlgebraTables t;
    const unsigned size = n + 1;
    t.names.resize(size);
    for (unsigned k = 0; k <= n; ++k) {
        if (k == 0)
            t.names[k] = "0";
        else if (k == n)
            t.names[k] = "1";
        else
            t.names[k] = rat_to_string(Rat(static_cast<long>(k), static_cast<long>(n)));
    }
    t.zero = 0;
    t.one = static_cast<ElemId>(n);
    t.orth.resize(size);
    for (unsigned k = 0; k <= n; ++k) t.orth[k] = static_cast<ElemId>(n - k);
    t.sum.assign(size, std::vector<ElemId>(size, kNoSum));
    for (unsigned a = 0; a <= n; ++a)
        for (unsigned b = 0; a + b <= n; ++b) t.sum[a][b] = static_cast<ElemId>(a + b);
    return validate_or_throw(t);
}

FiniteEffectAlgebra mo_ea(unsigned n) {
    if (n < 1) throw PreconditionError("mo_ea: n must be >= 1");
    EffectAlgebraTables t;
    const unsigned size = 2 + 2 * n;
    t.names.resize(size);
    t.names[0] = "0";
    t.names[1] = "1";
    for (unsigned i = 0; i < n; ++i) {
        t.names[2 + 2 * i] = "a" + std::to_string(i + 1);
        t.names[3 + 2 * i] = "a" + std::to_string(i + 1) + "'";
    }
    t.zero = 0;
    t.one = 1;
    t.orth.resize(size);
    t.orth[0] = 1;
    t.orth[1] = 0;
    for (unsigned i = 0; i < n; ++i) {
        t.orth[2 + 2 * i] = static_cast<ElemId>(3 + 2 * i);
        t.orth[3 + 2 * i] = static_cast<ElemId>(2 + 2 * i);
    }
    t.sum.assign(size, std::vector<ElemId>(size, kNoSum));
    for (unsigned a = 0; a < size; ++a) {
        t.sum[0][a] = static_cast<ElemId>(a);
        t.sum[a][0] = static_cast<ElemId>(a);
    }
    for (unsigned i = 0; i < n; ++i) {
        t.sum[2 + 2 * i][3 + 2 * i] = 1;
        t.sum[3 + 2 * i][2 + 2 * i] = 1;
    }
    return validate_or_throw(t);
}

FiniteEffectAlgebra product_ea(const FiniteEffectAlgebra& a, const FiniteEffectAlgebra& b) {
    if (a.size() < 2 || b.size() < 2)
        throw PreconditionError("product_ea: factors must be nontrivial");
    const ElemId na = static_cast<ElemId>(a.size());
    const ElemId nb = static_cast<ElemId>(b.size());
    auto id = [&](ElemId x, ElemId y) { return x * nb + y; };
    EffectAlgebraTables t;
    t.names.resize(static_cast<std::size_t>(na) * nb);
    for (ElemId x = 0; x < na; ++x)
        for (ElemId y = 0; y < nb; ++y)
            t.names[id(x, y)] = "(" + a.name(x) + "," + b.name(y) + ")";
    t.zero = id(a.zero(), b.zero());
    t.one = id(a.one(), b.one());
    t.orth.resize(t.names.size());
    for (ElemId x = 0; x < na; ++x)
        for (ElemId y = 0; y < nb; ++y) t.orth[id(x, y)] = id(a.orth(x), b.orth(y));
    t.sum.assign(t.names.size(), std::vector<ElemId>(t.names.size(), kNoSum));
    for (ElemId x1 = 0; x1 < na; ++x1)
        for (ElemId y1 = 0; y1 < nb; ++y1)
            for (ElemId x2 = 0; x2 < na; ++x2)
                for (ElemId y2 = 0; y2 < nb; ++y2)
                    if (a.defined(x1, x2) && b.defined(y1, y2))
                        t.sum[id(x1, y1)][id(x2, y2)] = id(a.sum(x1, x2), b.sum(y1, y2));
    return validate_or_throw(t);
}

FiniteEffectAlgebra horizontal_sum_ea(const FiniteEffectAlgebra& a,
                                      const FiniteEffectAlgebra& b) {
    if (a.size() < 2 || b.size() < 2)
        throw PreconditionError("horizontal_sum_ea: summands must be nontrivial");
    // Ids: 0, 1, then proper elements of a, then proper elements of b.
    std::vector<ElemId> amap(a.size()), bmap(b.size());
    EffectAlgebraTables t;
    t.names = {"0", "1"};
    for (ElemId x = 0; x < static_cast<ElemId>(a.size()); ++x) {
        if (x == a.zero())
            amap[x] = 0;
        else if (x == a.one())
            amap[x] = 1;
        else {
            amap[x] = static_cast<ElemId>(t.names.size());
            t.names.push_back("L:" + a.name(x));
        }
    }
    for (ElemId y = 0; y < static_cast<ElemId>(b.size()); ++y) {
        if (y == b.zero())
            bmap[y] = 0;
        else if (y == b.one())
            bmap[y] = 1;
        else {
            bmap[y] = static_cast<ElemId>(t.names.size());
            t.names.push_back("R:" + b.name(y));
        }
    }
    const std::size_t size = t.names.size();
    t.zero = 0;
    t.one = 1;
    t.orth.assign(size, kNoSum);
    t.sum.assign(size, std::vector<ElemId>(size, kNoSum));
    for (ElemId x = 0; x < static_cast<ElemId>(a.size()); ++x) {
        t.orth[amap[x]] = amap[a.orth(x)];
        for (ElemId y = 0; y < static_cast<ElemId>(a.size()); ++y)
            if (a.defined(x, y)) t.sum[amap[x]][amap[y]] = amap[a.sum(x, y)];
    }
    for (ElemId x = 0; x < static_cast<ElemId>(b.size()); ++x) {
        t.orth[bmap[x]] = bmap[b.orth(x)];
        for (ElemId y = 0; y < static_cast<ElemId>(b.size()); ++y)
            if (b.defined(x, y)) t.sum[bmap[x]][bmap[y]] = bmap[b.sum(x, y)];
    }
    return validate_or_throw(t);
}

MorphismCheck is_morphism(const EAMorphism& m) {
    const FiniteEffectAlgebra& A = *m.source;
    const FiniteEffectAlgebra& B = *m.target;
    if (m.map.size() != A.size()) return {false, std::nullopt, "map not total"};
    for (ElemId a = 0; a < static_cast<ElemId>(A.size()); ++a)
        if (m.map[a] < 0 || m.map[a] >= static_cast<ElemId>(B.size()))
            return {false, std::nullopt, "map image outside target"};
    if (m.map[A.one()] != B.one()) return {false, std::nullopt, "unit not preserved"};
    for (ElemId a = 0; a < static_cast<ElemId>(A.size()); ++a)
        for (ElemId b = 0; b < static_cast<ElemId>(A.size()); ++b) {
            if (!A.defined(a, b)) continue;
            if (!B.defined(m.map[a], m.map[b]))
                return {false, std::make_pair(a, b), "image sum undefined"};
            if (B.sum(m.map[a], m.map[b]) != m.map[A.sum(a, b)])
                return {false, std::make_pair(a, b), "image sum disagrees"};
        }
    // Orthosupplement preservation is a consequence; it must hold here.
    for (ElemId a = 0; a < static_cast<ElemId>(A.size()); ++a)
        if (m.map[A.orth(a)] != B.orth(m.map[a]))
            throw std::logic_error("morphism preserves sums but not orthosupplements");
    return {true, std::nullopt, ""};
}

namespace {

bool extend_iso(const FiniteEffectAlgebra& a, const FiniteEffectAlgebra& b,
                std::vector<ElemId>& map, std::vector<bool>& used, ElemId next) {
    const ElemId n = static_cast<ElemId>(a.size());
    while (next < n && map[next] != kNoSum) ++next;
    if (next == n) {
        EAMorphism m{&a, &b, map};
        if (!is_morphism(m).ok) return false;
        std::vector<ElemId> inverse(b.size());
        for (ElemId x = 0; x < n; ++x) inverse[map[x]] = x;
        return is_morphism({&b, &a, inverse}).ok;
    }
    for (ElemId y = 0; y < n; ++y) {
        if (used[y]) continue;
        map[next] = y;
        used[y] = true;
        // Cheap pruning: orthosupplement must be consistent when both ends
        // are already assigned.
        ElemId no = a.orth(next);
        bool consistent = map[no] == kNoSum || map[no] == b.orth(y);
        if (consistent && extend_iso(a, b, map, used, next + 1)) return true;
        map[next] = kNoSum;
        used[y] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<ElemId>> find_isomorphism(const FiniteEffectAlgebra& a,
                                                    const FiniteEffectAlgebra& b) {
    if (a.size() != b.size()) return std::nullopt;
    std::vector<ElemId> map(a.size(), kNoSum);
    std::vector<bool> used(b.size(), false);
    map[a.zero()] = b.zero();
    used[b.zero()] = true;
    if (a.one() != a.zero()) {
        if (used[b.one()]) return std::nullopt;
        map[a.one()] = b.one();
        used[b.one()] = true;
    }
    if (extend_iso(a, b, map, used, 0)) return map;
    return std::nullopt;
}

StatePolytope state_polytope(const FiniteEffectAlgebra& A) {
    const ElemId n = static_cast<ElemId>(A.size());
    std::vector<Equality> eqs;
    std::vector<Halfspace> ineqs;
    eqs.push_back({unit_vec(n, A.one()), Rat(1)});
    eqs.push_back({unit_vec(n, A.zero()), Rat(0)});
    for (ElemId a = 0; a < n; ++a)
        for (ElemId b = a; b < n; ++b) {
            if (!A.defined(a, b)) continue;
            Vec row = zero_vec(n);
            row[a] += 1;
            row[b] += 1;
            row[A.sum(a, b)] -= 1;
            if (!is_zero_vec(row)) eqs.push_back({std::move(row), Rat(0)});
        }
    for (ElemId a = 0; a < n; ++a) {
        ineqs.push_back({neg(unit_vec(n, a)), Rat(0)});  // phi(a) >= 0
        ineqs.push_back({unit_vec(n, a), Rat(1)});       // phi(a) <= 1
    }
    StatePolytope sp{Polytope::from_halfspaces(n, std::move(ineqs), std::move(eqs))};
    for (const Vec& v : sp.polytope.vertices())
        if (!is_state(A, v))
            throw std::logic_error("state polytope vertex fails the morphism conditions");
    return sp;
}

bool is_state(const FiniteEffectAlgebra& A, const Vec& phi) {
    if (phi.size() != A.size()) return false;
    if (phi[A.one()] != 1) return false;
    if (phi[A.zero()] != 0) return false;
    for (const Rat& x : phi)
        if (x < 0 || x > 1) return false;
    for (ElemId a = 0; a < static_cast<ElemId>(A.size()); ++a)
        for (ElemId b = 0; b < static_cast<ElemId>(A.size()); ++b)
            if (A.defined(a, b) && phi[a] + phi[b] != phi[A.sum(a, b)]) return false;
    return true;
}

}  // namespace eadual
