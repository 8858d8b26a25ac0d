#include "eadual/dd.hpp"

#include "eadual/linalg.hpp"

#include <algorithm>
#include <cstdint>

namespace eadual {

namespace {

// Tight-constraint bitmask per ray, over the full (sorted) constraint list.
struct TightSet {
    std::vector<std::uint64_t> bits;
    explicit TightSet(std::size_t n) : bits((n + 63) / 64, 0) {}
    void set(std::size_t i) { bits[i / 64] |= std::uint64_t(1) << (i % 64); }
    bool subset_of(const TightSet& other) const {
        for (std::size_t b = 0; b < bits.size(); ++b)
            if (bits[b] & ~other.bits[b]) return false;
        return true;
    }
    TightSet intersect(const TightSet& other) const {
        TightSet r(0);
        r.bits.resize(bits.size());
        for (std::size_t b = 0; b < bits.size(); ++b) r.bits[b] = bits[b] & other.bits[b];
        return r;
    }
};

struct Ray {
    Vec v;
    TightSet tight;
};

}  // namespace

DDPair extreme_rays(std::size_t dim, Matrix halfspaces) {
    for (Vec& h : halfspaces) {
        require_dim(h, dim, "extreme_rays halfspace");
        h = primitive(h);
    }
    // Zero normals carry no constraint.
    halfspaces.erase(std::remove_if(halfspaces.begin(), halfspaces.end(), is_zero_vec),
                     halfspaces.end());
    std::sort(halfspaces.begin(), halfspaces.end(), VecLess{});
    halfspaces.erase(std::unique(halfspaces.begin(), halfspaces.end()), halfspaces.end());
    const std::size_t m = halfspaces.size();

    Matrix lineality;
    for (std::size_t i = 0; i < dim; ++i) lineality.push_back(unit_vec(dim, i));
    std::vector<Ray> rays;

    auto tight_set_for = [&](const Vec& v, std::size_t upto) {
        TightSet t(m);
        for (std::size_t i = 0; i < upto; ++i)
            if (dot(halfspaces[i], v) == 0) t.set(i);
        return t;
    };

    for (std::size_t k = 0; k < m; ++k) {
        const Vec& a = halfspaces[k];

        // If the constraint cuts the lineality space, one lineality vector
        // turns into a ray and everything else is projected onto the
        // hyperplane a.x = 0.
        std::size_t piv = lineality.size();
        for (std::size_t j = 0; j < lineality.size(); ++j) {
            if (dot(a, lineality[j]) != 0) {
                piv = j;
                break;
            }
        }
        if (piv < lineality.size()) {
            Vec l = lineality[piv];
            Rat c = dot(a, l);
            if (c < 0) {
                l = neg(l);
                c = -c;
            }
            Matrix next;
            for (std::size_t j = 0; j < lineality.size(); ++j) {
                if (j == piv) continue;
                Rat f = dot(a, lineality[j]) / c;
                next.push_back(sub(lineality[j], scale(f, l)));
            }
            lineality = std::move(next);
            for (Ray& r : rays) {
                Rat f = dot(a, r.v) / c;
                if (f != 0) r.v = primitive(sub(r.v, scale(f, l)));
            }
            rays.push_back({primitive(l), TightSet(m)});
            // Projection can merge rays; dedupe keeping the first.
            std::sort(rays.begin(), rays.end(),
                      [](const Ray& x, const Ray& y) { return lex_compare(x.v, y.v) < 0; });
            rays.erase(std::unique(rays.begin(), rays.end(),
                                   [](const Ray& x, const Ray& y) { return x.v == y.v; }),
                       rays.end());
            for (Ray& r : rays) r.tight = tight_set_for(r.v, k + 1);
            continue;
        }

        // Standard double-description step on the pointed part.
        std::vector<Ray> pos, zero, negs;
        for (Ray& r : rays) {
            int s = sign(dot(a, r.v));
            if (s > 0)
                pos.push_back(std::move(r));
            else if (s == 0)
                zero.push_back(std::move(r));
            else
                negs.push_back(std::move(r));
        }
        // Adjacent (p, n) pairs combine into a new ray on the hyperplane.
        // Combinatorial adjacency: no third extreme ray is tight on every
        // constraint that is tight on both p and n.
        std::vector<Ray> combos;
        for (const Ray& p : pos) {
            for (const Ray& n : negs) {
                TightSet common = p.tight.intersect(n.tight);
                bool adjacent = true;
                auto check_block = [&](const std::vector<Ray>& group, const Ray* skip) {
                    for (const Ray& o : group) {
                        if (&o == skip) continue;
                        if (common.subset_of(o.tight)) return true;
                    }
                    return false;
                };
                if (check_block(pos, &p) || check_block(zero, nullptr) ||
                    check_block(negs, &n))
                    adjacent = false;
                if (!adjacent) continue;
                Vec w = sub(scale(dot(a, p.v), n.v), scale(dot(a, n.v), p.v));
                combos.push_back({primitive(w), TightSet(m)});
            }
        }
        std::vector<Ray> next;
        next.reserve(pos.size() + zero.size() + combos.size());
        for (Ray& r : pos) next.push_back(std::move(r));
        for (Ray& r : zero) next.push_back(std::move(r));
        for (Ray& r : combos) next.push_back(std::move(r));
        rays = std::move(next);
        std::sort(rays.begin(), rays.end(),
                  [](const Ray& x, const Ray& y) { return lex_compare(x.v, y.v) < 0; });
        rays.erase(std::unique(rays.begin(), rays.end(),
                               [](const Ray& x, const Ray& y) { return x.v == y.v; }),
                   rays.end());
        for (Ray& r : rays) r.tight = tight_set_for(r.v, k + 1);
    }

    DDPair out;
    if (!lineality.empty()) {
        out.lineality = rref(std::move(lineality));
        for (Vec& l : out.lineality) l = primitive_signed(l);
        std::sort(out.lineality.begin(), out.lineality.end(), VecLess{});
    }
    out.rays.reserve(rays.size());
    for (Ray& r : rays) out.rays.push_back(std::move(r.v));
    // Rays are only determined modulo lineality; reducing against the RREF
    // basis picks the canonical representative of each.
    for (Vec& r : out.rays) {
        for (const Vec& l : out.lineality) {
            std::size_t piv = 0;
            while (piv < l.size() && l[piv] == 0) ++piv;
            if (piv < l.size() && r[piv] != 0) r = sub(r, scale(r[piv] / l[piv], l));
        }
        r = primitive(r);
    }
    std::sort(out.rays.begin(), out.rays.end(), VecLess{});
    return out;
}

}  // namespace eadual
